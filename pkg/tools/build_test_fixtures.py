#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/fixtures/.

The CKAN packages and their expected canonical records are both spelled
out literally here: the expectations were written by hand-applying the
documented field mapping, not by running the parser.
"""

from __future__ import annotations

import json
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "tests" / "fixtures"

PORTAL = "data.gv.at"

# (filename stem, package document, expected record or None when the
# package is deliberately malformed).
CKAN_CASES: list[tuple[str, dict, dict | None]] = []


def case(stem: str, package: dict, expected: dict | None) -> None:
    CKAN_CASES.append((stem, package, expected))


def rec(dataset_id, title, description="", keywords=(), landing_url="", publisher=""):
    return {
        "portal_id": PORTAL,
        "dataset_id": dataset_id,
        "title": title,
        "description": description,
        "keywords": list(keywords),
        "landing_url": landing_url,
        "language": "und",
        "publisher": publisher,
    }


case(
    "pkg-000",
    {
        "id": "hundezonen-wien",
        "title": "Hundezonen Wien",
        "notes": "Bereiche für Hunde in der Stadt Wien.",
        "tags": [{"name": "hund"}, {"name": "wien"}, {"name": "hund"}],
        "url": "https://www.data.gv.at/katalog/dataset/hundezonen-wien",
        "organization": {"title": "Stadt Wien"},
    },
    rec(
        "hundezonen-wien",
        "Hundezonen Wien",
        "Bereiche für Hunde in der Stadt Wien.",
        ["hund", "wien"],
        "https://www.data.gv.at/katalog/dataset/hundezonen-wien",
        "Stadt Wien",
    ),
)
case(
    "pkg-001",
    {
        "id": "hundekotbeutel",
        "title": "Hundekotbeutel Automaten",
        "notes": "Standorte der Automaten für Hundekotbeutel.",
        "tags": [{"name": "hund"}, {"name": "sauberkeit"}],
        "organization": {"title": "Stadt Wien"},
    },
    rec(
        "hundekotbeutel",
        "Hundekotbeutel Automaten",
        "Standorte der Automaten für Hundekotbeutel.",
        ["hund", "sauberkeit"],
        "",
        "Stadt Wien",
    ),
)
case(
    "pkg-002",
    {
        "id": "citybike-wien",
        "title": "Citybike Stationen Wien",
        "notes": "Standorte der Citybike Stationen in Wien.",
        "tags": [{"name": "fahrrad"}, {"name": "wien"}, {"name": "verkehr"}],
        "url": "https://www.data.gv.at/katalog/dataset/citybike-wien",
    },
    rec(
        "citybike-wien",
        "Citybike Stationen Wien",
        "Standorte der Citybike Stationen in Wien.",
        ["fahrrad", "wien", "verkehr"],
        "https://www.data.gv.at/katalog/dataset/citybike-wien",
    ),
)
case(
    "pkg-003",
    {
        "name": "baumkataster-wien",
        "title": "Baumkataster Wien",
        "notes": "Alle Bäume der Stadt Wien mit Standort und Baumart.",
        "tags": [{"name": "baum"}, {"name": "wien"}, {"name": "umwelt"}],
    },
    rec(
        "baumkataster-wien",
        "Baumkataster Wien",
        "Alle Bäume der Stadt Wien mit Standort und Baumart.",
        ["baum", "wien", "umwelt"],
    ),
)
case(
    "pkg-004",
    {
        "id": "spielplaetze",
        "name": "spielplaetze-wien",
        "notes": "Spielplätze in den Parks der Stadt.",
        "tags": [{"name": "spielplatz"}, {"name": "park"}, {"name": "kinder"}],
    },
    rec(
        "spielplaetze",
        "spielplaetze-wien",
        "Spielplätze in den Parks der Stadt.",
        ["spielplatz", "park", "kinder"],
    ),
)
case(
    "pkg-005",
    {
        "id": "luftmessnetz",
        "title": "Luftmessnetz Wien",
        "notes": "Messwerte zur Luftqualität und zum Feinstaub.",
        "tags": [{"name": "luft"}, {"name": "feinstaub"}, {"name": "umwelt"}],
        "organization": {"title": "Umweltschutzabteilung"},
    },
    rec(
        "luftmessnetz",
        "Luftmessnetz Wien",
        "Messwerte zur Luftqualität und zum Feinstaub.",
        ["luft", "feinstaub", "umwelt"],
        "",
        "Umweltschutzabteilung",
    ),
)
case(
    "pkg-006",
    {
        "id": "wasserqualitaet",
        "title": "Wasserqualität der Alten Donau",
        "notes": "Regelmäßige Messungen der Wasserqualität.",
        "tags": [{"name": "wasser"}, {"name": "donau"}],
    },
    rec(
        "wasserqualitaet",
        "Wasserqualität der Alten Donau",
        "Regelmäßige Messungen der Wasserqualität.",
        ["wasser", "donau"],
    ),
)
case(
    "pkg-007",
    {
        "id": "radwege",
        "title": "Radwege Wien",
        "notes": "Das Netz der Radwege in der Stadt Wien.",
        "tags": [{"name": "fahrrad"}, {"name": "radweg"}, {"name": "verkehr"}],
    },
    rec(
        "radwege",
        "Radwege Wien",
        "Das Netz der Radwege in der Stadt Wien.",
        ["fahrrad", "radweg", "verkehr"],
    ),
)
case(
    "pkg-008",
    {
        "id": "parkanlagen",
        "title": "Parkanlagen Wien",
        "notes": "Alle öffentlichen Parkanlagen mit Fläche und Ausstattung.",
        "tags": [{"name": "park"}, {"name": "erholung"}],
    },
    rec(
        "parkanlagen",
        "Parkanlagen Wien",
        "Alle öffentlichen Parkanlagen mit Fläche und Ausstattung.",
        ["park", "erholung"],
    ),
)
case(
    "pkg-009",
    {
        "id": "schulen",
        "title": "Schulen Wien",
        "notes": "Standorte der öffentlichen Schulen.",
        "tags": [{"name": "schule"}, {"name": "bildung"}],
    },
    rec(
        "schulen",
        "Schulen Wien",
        "Standorte der öffentlichen Schulen.",
        ["schule", "bildung"],
    ),
)
case(
    "pkg-010",
    {
        "id": "kindergaerten",
        "title": "Kindergärten Wien",
        "notes": "Standorte der städtischen Kindergärten.",
        "tags": [{"name": "kindergarten"}, {"name": "bildung"}, {"name": "kinder"}],
    },
    rec(
        "kindergaerten",
        "Kindergärten Wien",
        "Standorte der städtischen Kindergärten.",
        ["kindergarten", "bildung", "kinder"],
    ),
)
case(
    "pkg-011",
    {
        "id": "maerkte",
        "title": "Märkte Wien",
        "notes": "Alle Wiener Märkte mit Öffnungszeiten.",
        "tags": [{"name": "markt"}, {"name": "lebensmittel"}],
    },
    rec(
        "maerkte",
        "Märkte Wien",
        "Alle Wiener Märkte mit Öffnungszeiten.",
        ["markt", "lebensmittel"],
    ),
)
case(
    "pkg-012",
    {
        "id": "bibliotheken",
        "title": "Büchereien Wien",
        "notes": "Zweigstellen der Büchereien mit Adressen.",
        "tags": [{"name": "bibliothek"}, {"name": "kultur"}],
    },
    rec(
        "bibliotheken",
        "Büchereien Wien",
        "Zweigstellen der Büchereien mit Adressen.",
        ["bibliothek", "kultur"],
    ),
)
case(
    "pkg-013",
    {
        "id": "schwimmbaeder",
        "title": "Schwimmbäder Wien",
        "notes": "Städtische Schwimmbäder und Freibäder.",
        "tags": [{"name": "schwimmbad"}, {"name": "sport"}],
    },
    rec(
        "schwimmbaeder",
        "Schwimmbäder Wien",
        "Städtische Schwimmbäder und Freibäder.",
        ["schwimmbad", "sport"],
    ),
)
case(
    "pkg-014",
    {
        "id": "haltestellen",
        "title": "Haltestellen öffentlicher Verkehr",
        "notes": "Haltestellen von Bus und Straßenbahn.",
        "tags": [{"name": "bus"}, {"name": "straßenbahn"}, {"name": "verkehr"}],
    },
    rec(
        "haltestellen",
        "Haltestellen öffentlicher Verkehr",
        "Haltestellen von Bus und Straßenbahn.",
        ["bus", "straßenbahn", "verkehr"],
    ),
)
case(
    "pkg-015",
    {
        "id": "brunnen",
        "title": "Trinkbrunnen Wien",
        "notes": "Öffentliche Trinkbrunnen mit Trinkwasser.",
        "tags": [{"name": "wasser"}, {"name": "brunnen"}],
    },
    rec(
        "brunnen",
        "Trinkbrunnen Wien",
        "Öffentliche Trinkbrunnen mit Trinkwasser.",
        ["wasser", "brunnen"],
    ),
)
case(
    "pkg-016",
    {
        "id": "denkmaeler",
        "title": "Denkmäler Wien",
        "notes": "Denkmäler und Gedenktafeln im öffentlichen Raum.",
        "tags": [{"name": "denkmal"}, {"name": "kultur"}, {"name": "geschichte"}],
    },
    rec(
        "denkmaeler",
        "Denkmäler Wien",
        "Denkmäler und Gedenktafeln im öffentlichen Raum.",
        ["denkmal", "kultur", "geschichte"],
    ),
)
# Deliberately malformed: neither title nor name.
case(
    "pkg-017",
    {
        "id": "kaputt",
        "notes": "Dieses Paket hat keinen Titel und keinen Namen.",
        "tags": [{"name": "fehler"}],
    },
    None,
)
case(
    "pkg-018",
    {
        "id": "hundefreilauf",
        "title": "Hundefreilaufflächen",
        "notes": "Freilaufflächen für Hunde in den Bezirken.",
        "tags": [{"name": "hund"}, {"name": "freizeit"}],
    },
    rec(
        "hundefreilauf",
        "Hundefreilaufflächen",
        "Freilaufflächen für Hunde in den Bezirken.",
        ["hund", "freizeit"],
    ),
)
case(
    "pkg-019",
    {
        "id": "friedhoefe",
        "title": "Friedhöfe Wien",
        "notes": "Städtische Friedhöfe mit Öffnungszeiten.",
        "tags": [{"name": "friedhof"}],
    },
    rec(
        "friedhoefe",
        "Friedhöfe Wien",
        "Städtische Friedhöfe mit Öffnungszeiten.",
        ["friedhof"],
    ),
)
case(
    "pkg-020",
    {
        "id": "museen",
        "title": "Museen Wien",
        "notes": "Museen der Stadt mit Besucherzahlen.",
        "tags": [{"name": "museum"}, {"name": "kultur"}],
    },
    rec(
        "museen",
        "Museen Wien",
        "Museen der Stadt mit Besucherzahlen.",
        ["museum", "kultur"],
    ),
)
case(
    "pkg-021",
    {
        "id": "theaterspielplan",
        "title": "Theater Spielplan",
        "notes": "Veranstaltungen der städtischen Theater.",
        "tags": [{"name": "theater"}, {"name": "veranstaltung"}],
    },
    rec(
        "theaterspielplan",
        "Theater Spielplan",
        "Veranstaltungen der städtischen Theater.",
        ["theater", "veranstaltung"],
    ),
)
case(
    "pkg-022",
    {
        "id": "wahlergebnisse",
        "title": "Wahlergebnisse Gemeinderatswahl",
        "notes": "Ergebnisse der Wahl nach Bezirken.",
        "tags": [{"name": "wahl"}, {"name": "politik"}],
    },
    rec(
        "wahlergebnisse",
        "Wahlergebnisse Gemeinderatswahl",
        "Ergebnisse der Wahl nach Bezirken.",
        ["wahl", "politik"],
    ),
)
case(
    "pkg-023",
    {
        "id": "budget",
        "title": "Budget der Stadt",
        "notes": "Haushalt der Stadt nach Ressorts.",
        "tags": [{"name": "budget"}, {"name": "finanzen"}],
    },
    rec(
        "budget",
        "Budget der Stadt",
        "Haushalt der Stadt nach Ressorts.",
        ["budget", "finanzen"],
    ),
)
case(
    "pkg-024",
    {
        "id": "bevoelkerung",
        "title": "Bevölkerung nach Bezirken",
        "notes": "Einwohnerzahlen der Bezirke nach Jahr.",
        "tags": [{"name": "bevölkerung"}, {"name": "statistik"}],
    },
    rec(
        "bevoelkerung",
        "Bevölkerung nach Bezirken",
        "Einwohnerzahlen der Bezirke nach Jahr.",
        ["bevölkerung", "statistik"],
    ),
)
case(
    "pkg-025",
    {
        "id": "laermkarte",
        "title": "Lärmkarte Wien",
        "notes": "Lärm entlang der großen Straßen.",
        "tags": [{"name": "lärm"}, {"name": "umwelt"}],
    },
    rec(
        "laermkarte",
        "Lärmkarte Wien",
        "Lärm entlang der großen Straßen.",
        ["lärm", "umwelt"],
    ),
)
case(
    "pkg-026",
    {
        "id": "solaranlagen",
        "title": "Solaranlagen Kataster",
        "notes": "Solaranlagen auf städtischen Gebäuden.",
        "tags": [{"name": "solarenergie"}, {"name": "energie"}],
    },
    rec(
        "solaranlagen",
        "Solaranlagen Kataster",
        "Solaranlagen auf städtischen Gebäuden.",
        ["solarenergie", "energie"],
    ),
)
case(
    "pkg-027",
    {
        "id": "muellsammelstellen",
        "title": "Müllsammelstellen",
        "notes": "Sammelstellen für Müll und Recycling.",
        "tags": [{"name": "müll"}, {"name": "recycling"}],
    },
    rec(
        "muellsammelstellen",
        "Müllsammelstellen",
        "Sammelstellen für Müll und Recycling.",
        ["müll", "recycling"],
    ),
)
case(
    "pkg-028",
    {
        "id": "hundezonen-graz",
        "title": "Hundezonen Graz",
        "notes": "Hundezonen im Stadtgebiet von Graz.",
        "tags": [{"name": "hund"}, {"name": "graz"}],
    },
    rec(
        "hundezonen-graz",
        "Hundezonen Graz",
        "Hundezonen im Stadtgebiet von Graz.",
        ["hund", "graz"],
    ),
)
case(
    "pkg-029",
    {
        "id": "weingaerten",
        "title": "Weingärten Wien",
        "notes": "Weinberge und Heurige am Stadtrand von Wien.",
        "tags": [{"name": "wein"}, {"name": "landwirtschaft"}],
    },
    rec(
        "weingaerten",
        "Weingärten Wien",
        "Weinberge und Heurige am Stadtrand von Wien.",
        ["wein", "landwirtschaft"],
    ),
)
# Empty tag names are dropped; tags without a name key are ignored.
case(
    "pkg-030",
    {
        "id": "obstbaeume",
        "title": "Obstbäume im öffentlichen Raum",
        "notes": "Apfel und Birne: Obstbäume zum Ernten.",
        "tags": [{"name": "obst"}, {"name": ""}, {"foo": "bar"}, {"name": "baum"}],
    },
    rec(
        "obstbaeume",
        "Obstbäume im öffentlichen Raum",
        "Apfel und Birne: Obstbäume zum Ernten.",
        ["obst", "baum"],
    ),
)
# No notes, no tags, unknown top-level fields ignored.
case(
    "pkg-031",
    {
        "id": "leerstand",
        "title": "Leerstehende Gebäude",
        "license_id": "cc-by",
        "maintainer": "niemand",
        "resources": [{"format": "CSV"}],
    },
    rec("leerstand", "Leerstehende Gebäude"),
)
# Numeric/null junk in optional fields is treated as absent.
case(
    "pkg-032",
    {
        "id": "kurzparkzonen",
        "title": "Kurzparkzonen",
        "notes": None,
        "url": 12345,
        "organization": {"name": "ma28"},
        "tags": [{"name": "parken"}, {"name": "verkehr"}],
    },
    rec("kurzparkzonen", "Kurzparkzonen", "", ["parken", "verkehr"]),
)
case(
    "pkg-033",
    {
        "id": "gemeindebauten",
        "title": "Gemeindebauten Wien",
        "notes": "Wohnungen im Gemeindebau.",
        "tags": [{"name": "wohnen"}, {"name": "gemeindebau"}],
        "organization": {"title": "Wiener Wohnen"},
    },
    rec(
        "gemeindebauten",
        "Gemeindebauten Wien",
        "Wohnungen im Gemeindebau.",
        ["wohnen", "gemeindebau"],
        "",
        "Wiener Wohnen",
    ),
)
case(
    "pkg-034",
    {
        "id": "winterdienst",
        "title": "Winterdienst Routen",
        "notes": "Routen der Schneeräumung bei Schnee und Eis.",
        "tags": [{"name": "winter"}, {"name": "schnee"}, {"name": "straße"}],
    },
    rec(
        "winterdienst",
        "Winterdienst Routen",
        "Routen der Schneeräumung bei Schnee und Eis.",
        ["winter", "schnee", "straße"],
    ),
)


MINI_RECORDS = [
    {
        "portal_id": "data.gv.at",
        "dataset_id": "hundezonen-wien",
        "title": "Hundezonen Wien",
        "description": "Bereiche für Hunde in der Stadt Wien.",
        "keywords": ["hund", "wien"],
        "landing_url": "https://www.data.gv.at/katalog/dataset/hundezonen-wien",
        "language": "de",
        "publisher": "Stadt Wien",
    },
    {
        "portal_id": "data.gv.at",
        "dataset_id": "hundekotbeutel",
        "title": "Hundekotbeutel Automaten",
        "description": "Automaten für Hundekotbeutel, aufgestellt für Hunde.",
        "keywords": ["hund"],
        "landing_url": "https://www.data.gv.at/katalog/dataset/hundekotbeutel",
        "language": "de",
        "publisher": "Stadt Wien",
    },
    {
        "portal_id": "data.gv.at",
        "dataset_id": "citybike-wien",
        "title": "Citybike Stationen Wien",
        "description": "Standorte der Citybike Stationen in Wien.",
        "keywords": ["fahrrad", "wien"],
        "landing_url": "https://www.data.gv.at/katalog/dataset/citybike-wien",
        "language": "de",
        "publisher": "Stadt Wien",
    },
    {
        "portal_id": "data.gov.ie",
        "dataset_id": "dog-parks",
        "title": "Dog parks Dublin",
        "description": "Public parks in Dublin where dogs are welcome.",
        "keywords": ["dog", "park"],
        "landing_url": "https://data.gov.ie/dataset/dog-parks",
        "language": "en",
        "publisher": "Dublin City Council",
    },
    {
        "portal_id": "data.gov.ie",
        "dataset_id": "tree-register",
        "title": "Tree register",
        "description": "Register of trees growing in public parks.",
        "keywords": ["tree", "park"],
        "landing_url": "https://data.gov.ie/dataset/tree-register",
        "language": "en",
        "publisher": "Dublin City Council",
    },
    {
        "portal_id": "data.gov.ie",
        "dataset_id": "apple-orchards",
        "title": "Apple orchards survey",
        "description": "Survey of apple orchards and fruit growing.",
        "keywords": ["apple", "orchard"],
        "landing_url": "https://data.gov.ie/dataset/apple-orchards",
        "language": "en",
        "publisher": "Department of Agriculture",
    },
    {
        "portal_id": "data.gov.ie",
        "dataset_id": "dog-licences",
        "title": "Dog licences by county",
        "description": "Number of dog licences issued per county.",
        "keywords": ["dog"],
        "landing_url": "https://data.gov.ie/dataset/dog-licences",
        "language": "en",
        "publisher": "",
    },
    {
        "portal_id": "datamx.io",
        "dataset_id": "perros-registro",
        "title": "Registro de perros",
        "description": "Registro municipal de perros con licencia.",
        "keywords": ["perro"],
        "landing_url": "https://datamx.io/dataset/perros-registro",
        "language": "es",
        "publisher": "",
    },
    {
        "portal_id": "dados.gov.br",
        "dataset_id": "caes-cadastro",
        "title": "Cadastro de cães",
        "description": "Cadastro municipal de cães adotados.",
        "keywords": ["cão"],
        "landing_url": "https://dados.gov.br/dataset/caes-cadastro",
        "language": "pt",
        "publisher": "",
    },
    {
        "portal_id": "beta.avoindata.fi",
        "dataset_id": "koirapuistot",
        "title": "Koirapuistot Helsinki",
        "description": "Koirien puistot Helsingin kaupungissa.",
        "keywords": ["koira", "puisto"],
        "landing_url": "https://beta.avoindata.fi/dataset/koirapuistot",
        "language": "fi",
        "publisher": "",
    },
    {
        "portal_id": "www.nosdonnees.fr",
        "dataset_id": "chiens-paris",
        "title": "Chiens déclarés à Paris",
        "description": "Nombre de chiens déclarés par arrondissement à Paris.",
        "keywords": ["chien", "paris"],
        "landing_url": "https://www.nosdonnees.fr/dataset/chiens-paris",
        "language": "fr",
        "publisher": "",
    },
    {
        "portal_id": "dati.trentino.it",
        "dataset_id": "frutteti-mele",
        "title": "Frutteti di mele",
        "description": "Mappa dei frutteti di mele nella provincia di Trento.",
        "keywords": ["mela", "frutteto"],
        "landing_url": "https://dati.trentino.it/dataset/frutteti-mele",
        "language": "it",
        "publisher": "Provincia di Trento",
    },
]


SENTENCES = {
    "de": [
        "Die Kinder spielen am Nachmittag gerne im großen Park neben der Schule.",
        "Viele Menschen fahren jeden Morgen mit der Straßenbahn zur Arbeit in die Stadt.",
        "Das Wetter war gestern sehr kalt und es hat den ganzen Tag geschneit.",
        "Die Bibliothek öffnet um neun Uhr und schließt am Abend um sieben.",
        "Unsere Nachbarn haben einen kleinen Hund und zwei graue Katzen.",
        "Im Sommer schwimmen wir oft im See und essen danach ein Eis.",
        "Der Bürgermeister sprach über die Zukunft der öffentlichen Verkehrsmittel.",
        "Auf dem Markt kaufen wir frisches Gemüse, Brot und ein Stück Käse.",
        "Die Regierung veröffentlichte neue Zahlen zur Entwicklung der Wirtschaft.",
        "Wegen des starken Regens wurde das Fußballspiel am Sonntag abgesagt.",
    ],
    "en": [
        "The children like to play in the large park next to the school.",
        "Many people take the tram to work in the city every morning.",
        "The weather was very cold yesterday and it snowed all day long.",
        "The library opens at nine in the morning and closes at seven.",
        "Our neighbours have a small dog and two grey cats at home.",
        "In summer we often swim in the lake and eat ice cream afterwards.",
        "The mayor spoke about the future of public transport in the region.",
        "At the market we buy fresh vegetables, bread and a piece of cheese.",
        "The government published new figures about the development of the economy.",
        "Because of the heavy rain the football match on Sunday was cancelled.",
    ],
    "es": [
        "A los niños les gusta jugar por la tarde en el parque grande junto a la escuela.",
        "Mucha gente toma el tranvía cada mañana para ir al trabajo en la ciudad.",
        "Ayer el tiempo estuvo muy frío y nevó durante todo el día.",
        "La biblioteca abre a las nueve de la mañana y cierra a las siete.",
        "Nuestros vecinos tienen un perro pequeño y dos gatos grises.",
        "En verano nadamos a menudo en el lago y después comemos un helado.",
        "El alcalde habló sobre el futuro del transporte público en la región.",
        "En el mercado de la ciudad compramos cada mañana verduras frescas y pan, y también llevamos queso añejo.",
        "El gobierno publicó nuevas cifras sobre el desarrollo de la economía.",
        "Por la fuerte lluvia se canceló el partido de fútbol del domingo.",
    ],
    "fi": [
        "Lapset leikkivät mielellään iltapäivällä suuressa puistossa koulun vieressä.",
        "Monet ihmiset matkustavat joka aamu raitiovaunulla töihin kaupunkiin.",
        "Sää oli eilen hyvin kylmä ja lunta satoi koko päivän.",
        "Kirjasto avataan aamulla yhdeksältä ja suljetaan illalla seitsemältä.",
        "Naapureillamme on pieni koira ja kaksi harmaata kissaa.",
        "Kesällä uimme usein järvessä ja syömme sen jälkeen jäätelöä.",
        "Pormestari puhui joukkoliikenteen tulevaisuudesta alueella.",
        "Torilta ostamme tuoreita vihanneksia, leipää ja palan juustoa.",
        "Hallitus julkaisi uusia lukuja talouden kehityksestä.",
        "Kovan sateen takia sunnuntain jalkapallo-ottelu peruttiin.",
    ],
    "fr": [
        "Les enfants aiment jouer l'après-midi dans le grand parc à côté de l'école.",
        "Beaucoup de gens prennent le tramway chaque matin pour aller au travail en ville.",
        "Hier le temps était très froid et il a neigé toute la journée.",
        "La bibliothèque ouvre à neuf heures du matin et ferme à sept heures du soir.",
        "Nos voisins ont un petit chien et deux chats gris à la maison.",
        "En été nous nageons souvent dans le lac et mangeons ensuite une glace.",
        "Le maire a parlé de l'avenir des transports publics dans la région.",
        "Au marché nous achetons des légumes frais, du pain et un morceau de fromage.",
        "Le gouvernement a publié de nouveaux chiffres sur l'évolution de l'économie.",
        "À cause de la forte pluie, le match de football de dimanche a été annulé.",
    ],
    "it": [
        "Ai bambini piace molto giocare ogni pomeriggio nel grande parco che si trova accanto alla scuola della città.",
        "Molte persone prendono il tram ogni mattina per andare al lavoro in città.",
        "Ieri il tempo era molto freddo e ha nevicato per tutto il giorno.",
        "La biblioteca apre alle nove del mattino e chiude alle sette di sera.",
        "I nostri vicini hanno un cane piccolo e due gatti grigi in casa.",
        "In estate nuotiamo spesso nel lago e poi mangiamo un gelato.",
        "Il sindaco ha parlato del futuro dei trasporti pubblici nella regione.",
        "Al mercato compriamo verdure fresche, pane e un pezzo di formaggio.",
        "Il governo ha pubblicato nuovi dati sullo sviluppo dell'economia.",
        "A causa della forte pioggia la partita di calcio di domenica è stata annullata.",
    ],
    "pt": [
        "As crianças gostam de brincar à tarde no grande parque que fica ao lado da escola da vizinhança.",
        "Muitas pessoas apanham o elétrico todas as manhãs para ir ao trabalho na cidade.",
        "Ontem o tempo esteve muito frio e nevou durante todo o dia.",
        "A biblioteca abre às nove da manhã e fecha às sete da noite.",
        "Os nossos vizinhos têm um cão pequeno e dois gatos cinzentos em casa.",
        "No verão nadamos muitas vezes no lago e depois comemos um gelado.",
        "O prefeito falou sobre o futuro dos transportes públicos na região.",
        "No mercado compramos legumes frescos, pão e um pedaço de queijo.",
        "O governo publicou ontem novos números e informações sobre o desenvolvimento da economia do país.",
        "Por causa da chuva forte, o jogo de futebol de domingo foi cancelado.",
    ],
}


def ckan_http_pages() -> list[dict]:
    """Three recorded package_search pages of two packages each."""
    packages = [
        {
            "id": f"ie-{i:03d}",
            "title": title,
            "notes": notes,
            "tags": [{"name": tag} for tag in tags],
            "url": f"https://data.gov.ie/dataset/ie-{i:03d}",
            "organization": {"title": org},
        }
        for i, (title, notes, tags, org) in enumerate(
            [
                ("Dog parks Dublin", "Parks where dogs are welcome.", ["dog", "park"], "Dublin City Council"),
                ("Tree register", "Trees in public parks.", ["tree"], "Dublin City Council"),
                ("Air quality monitors", "Hourly air quality readings.", ["air", "environment"], "EPA"),
                ("School locations", "Primary and secondary schools.", ["school"], "Department of Education"),
                ("Bus stops", "All bus stops with coordinates.", ["bus", "transport"], "NTA"),
                ("Library branches", "Public library branches.", ["library"], "Dublin City Council"),
            ]
        )
    ]
    pages = []
    for start in range(0, 6, 2):
        pages.append(
            {
                "help": "https://data.gov.ie/api/3/action/help_show?name=package_search",
                "success": True,
                "result": {"count": 6, "results": packages[start : start + 2]},
            }
        )
    return pages


TRANSCRIPTS = [
    {"name": "simple-search", "events": [{"type": "text", "text": "dogs in vienna"}]},
    {
        "name": "search-then-refine",
        "events": [
            {"type": "text", "text": "dogs in vienna"},
            {"type": "pick", "payload": "c:00000100"},
        ],
    },
    {
        "name": "clarify-fruit",
        "events": [
            {"type": "text", "text": "apple"},
            {"type": "pick", "payload": "c:00000011"},
        ],
    },
    {
        "name": "clarify-company",
        "events": [
            {"type": "text", "text": "apple"},
            {"type": "pick", "payload": "c:00000010"},
        ],
    },
    {
        "name": "paging",
        "events": [
            {"type": "text", "text": "dogs"},
            {"type": "more"},
            {"type": "more"},
            {"type": "more"},
        ],
    },
    {
        "name": "reset-and-requery",
        "events": [
            {"type": "text", "text": "dogs in vienna"},
            {"type": "reset"},
            {"type": "text", "text": "trees"},
        ],
    },
    {
        "name": "invalid-picks",
        "events": [
            {"type": "pick", "payload": "c:00000153"},
            {"type": "more"},
            {"type": "text", "text": "dogs"},
            {"type": "pick", "payload": "not-a-concept"},
        ],
    },
    {
        "name": "text-while-clarifying",
        "events": [
            {"type": "text", "text": "apple"},
            {"type": "text", "text": "dogs"},
            {"type": "pick", "payload": "c:00000011"},
        ],
    },
    {
        "name": "cross-lingual-german",
        "events": [
            {"type": "text", "text": "hunde in wien"},
            {"type": "pick", "payload": "MORE"},
            {"type": "pick", "payload": "RESET"},
        ],
    },
    {
        "name": "no-concepts",
        "events": [
            {"type": "text", "text": "qwertzuiop asdfgh"},
            {"type": "text", "text": "mele trento"},
            {"type": "more"},
        ],
    },
]


def main() -> None:
    ckan_dir = FIXTURES / "ckan"
    ckan_dir.mkdir(parents=True, exist_ok=True)
    expected_lines = []
    for stem, package, expected in CKAN_CASES:
        path = ckan_dir / f"{stem}.json"
        path.write_text(
            json.dumps(package, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        if expected is not None:
            expected_lines.append(
                json.dumps(expected, ensure_ascii=False, separators=(",", ":"))
            )
    (FIXTURES / "ckan_expected.records.ndjson").write_text(
        "\n".join(expected_lines) + "\n", encoding="utf-8"
    )

    (FIXTURES / "mini.records.ndjson").write_text(
        "\n".join(
            json.dumps(record, ensure_ascii=False, separators=(",", ":"))
            for record in MINI_RECORDS
        )
        + "\n",
        encoding="utf-8",
    )

    lines = []
    for lang in sorted(SENTENCES):
        for sentence in SENTENCES[lang]:
            lines.append(f"{lang}\t{sentence}")
    (FIXTURES / "sentences.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    http_dir = FIXTURES / "ckan_http"
    http_dir.mkdir(exist_ok=True)
    for i, page in enumerate(ckan_http_pages()):
        (http_dir / f"page{i}.json").write_text(
            json.dumps(page, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )

    (FIXTURES / "transcripts.json").write_text(
        json.dumps(TRANSCRIPTS, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )

    print(f"{len(CKAN_CASES)} ckan files, {len(expected_lines)} expected records")
    print(f"{len(MINI_RECORDS)} mini records, {sum(len(v) for v in SENTENCES.values())} sentences")


if __name__ == "__main__":
    main()
