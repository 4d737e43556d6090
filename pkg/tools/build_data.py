#!/usr/bin/env python3
"""Regenerate the bundled data artifacts under src/odsearch/data/.

Outputs: lexicon.tsv, concept_graph.tsv, concept_labels.tsv, and one
.profile file per training text.  The concept inventory below is the
source of truth; concept ids are assigned from the alphabetically sorted
concept keys, so edits here keep ids stable only when they do not change
key order.  Run from the repository root:

    python3 tools/build_data.py
"""

from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from odsearch.langid import build_profile, write_profile  # noqa: E402
from odsearch.linker import normalize_tokens  # noqa: E402

DATA = REPO / "src" / "odsearch" / "data"

LANG_ORDER = ("en", "de", "fr", "es", "it", "pt", "fi")

# One concept per line: "key: en | de | fr | es | it | pt | fi".
# Surfaces are comma-separated; an empty cell means the language has no
# bundled surface form for that concept.  A surface listed under several
# concepts in the same language becomes ambiguous with uniform priors.
TABLE: list[tuple[str, str]] = [
    ("animals", """
dog: dog,dogs | hund,hunde | chien,chiens | perro,perros | cane,cani | cão,cães,cachorro | koira,koirat
cat: cat,cats | katze,katzen | chat,chats | gato,gatos | gatto,gatti | gato,gatos | kissa,kissat
horse: horse,horses | pferd,pferde | cheval,chevaux | caballo,caballos | cavallo,cavalli | cavalo,cavalos | hevonen,hevoset
cow: cow,cows | kuh,kühe | vache,vaches | vaca,vacas | mucca,mucche | vaca,vacas | lehmä,lehmät
pig: pig,pigs | schwein,schweine | cochon,porc | cerdo,cerdos | maiale,maiali | porco,porcos | sika,siat
sheep: sheep | schaf,schafe | mouton,moutons | oveja,ovejas | pecora,pecore | ovelha,ovelhas | lammas,lampaat
goat: goat,goats | ziege,ziegen | chèvre,chèvres | cabra,cabras | capra,capre | cabra,cabras | vuohi
chicken: chicken,hen | huhn,hühner | poule,poulet | gallina,pollo | gallina,pollo | galinha,frango | kana,kanat
bird: bird,birds | vogel,vögel | oiseau,oiseaux | pájaro,ave | uccello,uccelli | pássaro,ave | lintu,linnut
fish: fish | fisch,fische | poisson,poissons | pez,pescado | pesce,pesci | peixe,peixes | kala,kalat
bee: bee,bees | biene,bienen | abeille,abeilles | abeja,abejas | ape,api | abelha,abelhas | mehiläinen,mehiläiset
insect: insect,insects | insekt,insekten | insecte,insectes | insecto,insectos | insetto,insetti | inseto,insetos | hyönteinen,hyönteiset
butterfly: butterfly | schmetterling | papillon | mariposa | farfalla | borboleta | perhonen
deer: deer | hirsch,reh | cerf | ciervo | cervo | veado | peura
fox: fox,foxes | fuchs,füchse | renard | zorro | volpe | raposa | kettu
wolf: wolf,wolves | wolf,wölfe | loup | lobo | lupo | lobo | susi
bear: bear,bears | bär,bären | ours | oso | orso | urso | karhu
rabbit: rabbit,rabbits | kaninchen,hase | lapin | conejo | coniglio | coelho | kani,jänis
mouse: mouse,mice | maus,mäuse | souris | ratón | topo | rato | hiiri
duck: duck,ducks | ente,enten | canard | pato | anatra | pato | sorsa,ankka
swan: swan | schwan | cygne | cisne | cigno | cisne | joutsen
frog: frog,frogs | frosch,frösche | grenouille | rana | rana | rã,sapo | sammakko
snake: snake | schlange | serpent | serpiente | serpente | cobra,serpente | käärme
spider: spider | spinne | araignée | araña | ragno | aranha | hämähäkki
animal: animal,animals | tier,tiere | animal,animaux | animal,animales | animale,animali | animal,animais | eläin,eläimet
"""),
    ("nature", """
tree: tree,trees | baum,bäume | arbre,arbres | árbol,árboles | albero,alberi | árvore,árvores | puu,puut
forest: forest,forests | wald,wälder | forêt,forêts | bosque,bosques | bosco,foresta | floresta,mata | metsä,metsät
park: park,parks | park,parks | parc,parcs | parque,parques | parco,parchi | parque,parques | puisto,puistot
garden: garden,gardens | garten,gärten | jardin,jardins | jardín,jardines | giardino,giardini | jardim,jardins | puutarha
flower: flower,flowers | blume,blumen | fleur,fleurs | flor,flores | fiore,fiori | flor,flores | kukka,kukat
plant: plant,plants | pflanze,pflanzen | plante,plantes | planta,plantas | pianta,piante | planta,plantas | kasvi,kasvit
grass: grass | gras,rasen | herbe | hierba,césped | erba | grama,relva | ruoho,nurmikko
meadow: meadow | wiese,wiesen | prairie,pré | pradera,prado | prato,prati | prado | niitty
lake: lake,lakes | see,seen | lac,lacs | lago,lagos | lago,laghi | lago,lagos | järvi,järvet
river: river,rivers | fluss,flüsse | rivière,fleuve | río,ríos | fiume,fiumi | rio,rios | joki,joet
mountain: mountain,mountains | berg,berge | montagne,montagnes | montaña,montañas | montagna,montagne | montanha,montanhas | vuori,vuoret
hill: hill,hills | hügel | colline,collines | colina,cerro | collina,colline | colina,morro | mäki,kukkula
valley: valley,valleys | tal,täler | vallée,vallées | valle,valles | valle,valli | vale,vales | laakso
sea: sea | meer | mer | mar | mare | mar | meri
beach: beach,beaches | strand,strände | plage,plages | playa,playas | spiaggia,spiagge | praia,praias | ranta,rannat
island: island,islands | insel,inseln | île,îles | isla,islas | isola,isole | ilha,ilhas | saari,saaret
coast: coast | küste | côte,littoral | costa | costa | costa,litoral | rannikko
soil: soil | boden | sol | suelo | suolo | solo | maaperä
stone: stone,rock | stein,steine | pierre | piedra | pietra,sasso | pedra | kivi,kivet
sand: sand | sand | sable | arena | sabbia | areia | hiekka
nature: nature | natur | nature | naturaleza | natura | natureza | luonto
landscape: landscape | landschaft | paysage | paisaje | paesaggio | paisagem | maisema
swamp: swamp,marsh | moor,sumpf | marais | pantano | palude | pântano | suo
""" ),
    ("weather", """
weather: weather | wetter | météo | tiempo | tempo,meteo | tempo | sää
climate: climate | klima | climat | clima | clima | clima | ilmasto
temperature: temperature,temperatures | temperatur,temperaturen | température,températures | temperatura,temperaturas | temperatura,temperature | temperatura,temperaturas | lämpötila,lämpötilat
rain: rain,rainfall | regen,niederschlag | pluie,précipitations | lluvia,precipitación | pioggia,precipitazioni | chuva,precipitação | sade,sateet
snow: snow | schnee | neige | nieve | neve | neve | lumi
wind: wind,winds | wind,winde | vent,vents | viento,vientos | vento,venti | vento,ventos | tuuli,tuulet
storm: storm,storms | sturm,stürme | tempête,orage | tormenta | tempesta,temporale | tempestade | myrsky
sun: sun,sunshine | sonne,sonnenschein | soleil | sol | sole | sol | aurinko
cloud: cloud,clouds | wolke,wolken | nuage,nuages | nube,nubes | nuvola,nuvole | nuvem,nuvens | pilvi,pilvet
fog: fog | nebel | brouillard | niebla | nebbia | neblina,nevoeiro | sumu
ice: ice | eis | glace | hielo | ghiaccio | gelo | jää
frost: frost | frost | gelée | helada | brina | geada | halla,pakkanen
heat: heat,heatwave | hitze,hitzewelle | chaleur,canicule | calor | caldo,calura | calor | helle,kuumuus
drought: drought | dürre,trockenheit | sécheresse | sequía | siccità | seca | kuivuus
flood: flood,floods | hochwasser,überschwemmung | inondation,crue | inundación | alluvione,inondazione | inundação,enchente | tulva,tulvat
humidity: humidity | luftfeuchtigkeit | humidité | humedad | umidità | umidade | kosteus
air: air | luft | air | aire | aria | ar | ilma
"""),
    ("city", """
city: city,cities | stadt,städte | ville,villes | ciudad,ciudades | città | cidade,cidades | kaupunki,kaupungit
municipality: municipality,municipalities | gemeinde,gemeinden | commune,communes | municipio,municipios | comune,comuni | município,municípios | kunta,kunnat
district: district,districts | bezirk,bezirke,stadtteil | arrondissement,quartier | distrito,barrio | quartiere,circoscrizione | distrito,bairro | kaupunginosa
street: street,streets | straße,strassen,gasse | rue,rues | calle,calles | strada,strade,via | rua,ruas | katu,kadut
road: road,roads | weg,landstraße | route,routes,chemin | carretera,camino | carreggiata | estrada,caminho | tie,tiet
bridge: bridge,bridges | brücke,brücken | pont,ponts | puente,puentes | ponte,ponti | ponte,pontes | silta,sillat
tunnel: tunnel,tunnels | tunnel | tunnel | túnel | galleria | túnel | tunneli
square: square,squares | platz,plätze | place,places | plaza,plazas | piazza,piazze | praça,praças | aukio
building: building,buildings | gebäude | bâtiment,bâtiments | edificio,edificios | edificio,edifici | edifício,prédio | rakennus,rakennukset
house: house,houses | haus,häuser | maison,maisons | casa,casas | casa,case | casa,casas | talo,talot
apartment: apartment,flat | wohnung,wohnungen | appartement,logement | apartamento,piso,vivienda | appartamento,alloggio | apartamento | asunto,asunnot
address: address,addresses | adresse,adressen | adresse,adresses | dirección,direcciones | indirizzo,indirizzi | endereço,endereços | osoite,osoitteet
bench: bench,benches | bank,bänke | banc,bancs | banco | panchina,panchine | banco | penkki,penkit
fountain: fountain,fountains | brunnen | fontaine,fontaines | fuente,fuentes | fontana,fontane | fonte,chafariz | suihkulähde
monument: monument,monuments | denkmal,denkmäler | monument,monuments | monumento,monumentos | monumento,monumenti | monumento,monumentos | muistomerkki
cemetery: cemetery,cemeteries | friedhof,friedhöfe | cimetière,cimetières | cementerio,cementerios | cimitero,cimiteri | cemitério,cemitérios | hautausmaa
playground: playground,playgrounds | spielplatz,spielplätze | aire de jeux | parque infantil | parco giochi | parque infantil | leikkipaikka,leikkikenttä
parking: parking,car park | parkplatz,parkplätze,parkhaus | stationnement | aparcamiento,estacionamiento | parcheggio,parcheggi | estacionamento | pysäköinti,parkkipaikka
sidewalk: sidewalk,pavement | gehsteig,gehweg | trottoir | acera | marciapiede | calçada | jalkakäytävä
streetlight: streetlight,street lamp | straßenlaterne,laterne | lampadaire,réverbère | farola | lampione | iluminação pública | katuvalo,katuvalot
"""),
    ("facilities", """
school: school,schools | schule,schulen | école,écoles | escuela,escuelas,colegio | scuola,scuole | escola,escolas | koulu,koulut
university: university,universities | universität,universitäten,hochschule | université,universités | universidad,universidades | università | universidade,universidades | yliopisto,yliopistot
kindergarten: kindergarten,nursery,childcare | kindergarten,kindergärten,kita | crèche,maternelle | guardería | asilo,scuola materna | creche,jardim de infância | päiväkoti,päiväkodit
hospital: hospital,hospitals | krankenhaus,krankenhäuser,spital | hôpital,hôpitaux | hospital,hospitales | ospedale,ospedali | hospital,hospitais | sairaala,sairaalat
pharmacy: pharmacy,pharmacies | apotheke,apotheken | pharmacie,pharmacies | farmacia,farmacias | farmacia,farmacie | farmácia,farmácias | apteekki,apteekit
library: library,libraries | bibliothek,bibliotheken,bücherei | bibliothèque,bibliothèques | biblioteca,bibliotecas | biblioteca,biblioteche | biblioteca,bibliotecas | kirjasto,kirjastot
museum: museum,museums | museum,museen | musée,musées | museo,museos | museo,musei | museu,museus | museo,museot
theater: theater,theatre | theater | théâtre,théâtres | teatro,teatros | teatro,teatri | teatro,teatros | teatteri,teatterit
cinema: cinema,movie theater | kino,kinos | cinéma,cinémas | cine,cines | cinema | cinema | elokuvateatteri
church: church,churches | kirche,kirchen | église,églises | iglesia,iglesias | chiesa,chiese | igreja,igrejas | kirkko,kirkot
market: market,markets | markt,märkte | marché,marchés | mercado,mercados | mercato,mercati | mercado,feira | tori,markkinat
shop: shop,store | geschäft,laden | magasin,boutique | tienda,comercio | negozio,bottega | loja,lojas | kauppa,myymälä
restaurant: restaurant,restaurants | restaurant,gasthaus | restaurant,restaurants | restaurante,restaurantes | ristorante,ristoranti | restaurante,restaurantes | ravintola,ravintolat
hotel: hotel,hotels | hotel,hotels | hôtel,hôtels | hotel,hoteles | albergo,hotel | hotel,hotéis | hotelli,hotellit
swimming_pool: swimming pool,pool | schwimmbad,freibad,hallenbad | piscine,piscines | piscina,piscinas | piscina,piscine | piscina,piscinas | uimahalli,uima-allas
stadium: stadium,stadiums | stadion,stadien | stade,stades | estadio,estadios | stadio,stadi | estádio,estádios | stadion
town_hall: town hall,city hall | rathaus,rathäuser | mairie,hôtel de ville | ayuntamiento | municipio | prefeitura,câmara municipal | kaupungintalo
post_office: post office | postamt,post | bureau de poste,poste | oficina de correos,correos | ufficio postale,posta | correios | posti,postitoimisto
police: police,police station | polizei,polizeiwache | police,commissariat | policía,comisaría | polizia,questura | polícia,delegacia | poliisi,poliisiasema
fire_station: fire station,fire brigade,firefighters | feuerwehr,feuerwache | pompiers,caserne de pompiers | bomberos | vigili del fuoco,pompieri | bombeiros | palokunta,paloasema
bakery: bakery,bakeries | bäckerei,bäckereien | boulangerie,boulangeries | panadería,panaderías | panificio,panetteria | padaria,padarias | leipomo,leipomot
"""),
    ("transport", """
bus: bus,buses | bus,autobus | bus,autobus | autobús,autobuses | autobus,pullman | ônibus,autocarro | bussi,bussit,linja-auto
tram: tram,streetcar | straßenbahn,tram | tramway,tram | tranvía | tram | bonde,elétrico | raitiovaunu,ratikka
train: train,trains,railway | zug,züge,eisenbahn,bahn | train,trains,chemin de fer | tren,trenes,ferrocarril | treno,treni,ferrovia | trem,comboio,ferrovia | juna,junat,rautatie
metro: metro,subway,underground | u-bahn,metro | métro | metro | metropolitana,metro | metrô,metro | metro
bicycle: bicycle,bicycles,bike,bikes,cycling | fahrrad,fahrräder,rad,radverkehr | vélo,vélos,bicyclette,cyclisme | bicicleta,bicicletas,ciclismo | bicicletta,biciclette,ciclismo | bicicleta,bicicletas,ciclismo | polkupyörä,pyörä,pyöräily
car: car,cars,automobile | auto,autos,pkw | voiture,voitures,automobile | coche,coches,automóvil | auto,automobile,macchina | carro,carros,automóvel | auto,autot,henkilöauto
truck: truck,lorry | lkw,lastwagen | camion,poids lourd | camión,camiones | camion | caminhão,camião | kuorma-auto
taxi: taxi,taxis | taxi,taxis | taxi,taxis | taxi,taxis | taxi,tassì | táxi,táxis | taksi,taksit
motorcycle: motorcycle,motorbike | motorrad,motorräder | moto,motocyclette | moto,motocicleta | moto,motocicletta | moto,motocicleta | moottoripyörä
airport: airport,airports | flughafen,flughäfen | aéroport,aéroports | aeropuerto,aeropuertos | aeroporto,aeroporti | aeroporto,aeroportos | lentokenttä,lentoasema
station: station,train station | bahnhof,bahnhöfe,haltestelle | gare,gares,station | estación,estaciones | stazione,stazioni | estação,estações | asema,asemat,rautatieasema
harbor: harbor,harbour,port | hafen,häfen | port,ports | puerto,puertos | porto,porti | porto,portos | satama,satamat
ferry: ferry,ferries | fähre,fähren | ferry,bac | ferry,transbordador | traghetto | balsa | lautta
traffic: traffic | verkehr,straßenverkehr | circulation,trafic | tráfico,tránsito | traffico | trânsito,tráfego | liikenne
accident: accident,accidents | unfall,unfälle | accident,accidents | accidente,accidentes | incidente,incidenti | acidente,acidentes | onnettomuus,onnettomuudet
ticket: ticket,tickets,fare | fahrkarte,ticket | billet,ticket | billete,boleto | biglietto,biglietti | bilhete,passagem | lippu,liput
timetable: timetable,schedule | fahrplan,fahrpläne | horaire,horaires | horario,horarios | orario,orari | horário,horários | aikataulu,aikataulut
traffic_light: traffic light,traffic lights | ampel,ampeln | feu tricolore,feux tricolores | semáforo,semáforos | semaforo,semafori | semáforo,semáforos | liikennevalo,liikennevalot
crosswalk: crosswalk,pedestrian crossing | zebrastreifen,schutzweg | passage piéton | paso de peatones,paso de cebra | strisce pedonali | faixa de pedestres,passadeira | suojatie
"""),
    ("environment", """
water: water | wasser | eau,eaux | agua,aguas | acqua,acque | água,águas | vesi,vedet
drinking_water: drinking water,tap water | trinkwasser | eau potable | agua potable | acqua potabile | água potável | juomavesi
wastewater: wastewater,sewage | abwasser | eaux usées | aguas residuales | acque reflue | esgoto,águas residuais | jätevesi
sewer: sewer,sewerage,drainage | kanalisation | égout,assainissement | alcantarillado | fognatura | rede de esgoto | viemäri
waste: waste,garbage,rubbish,trash | müll,abfall | déchets,ordures | residuos,basura | rifiuti,spazzatura | lixo,resíduos | jäte,jätteet,roska
recycling: recycling | recycling,wiederverwertung | recyclage | reciclaje | riciclo,riciclaggio | reciclagem | kierrätys
compost: compost,composting | kompost | compost | compostaje | compostaggio | compostagem | komposti
energy: energy | energie | énergie | energía | energia | energia | energia
electricity: electricity,power | strom,elektrizität | électricité | electricidad | elettricità,energia elettrica | eletricidade,energia elétrica | sähkö
gas: gas,natural gas | gas,erdgas | gaz | gas | gas,metano | gás | kaasu
heating: heating | heizung,fernwärme | chauffage | calefacción | riscaldamento | aquecimento | lämmitys
solar: solar energy,solar power,photovoltaic | solarenergie,photovoltaik,solaranlage | énergie solaire,photovoltaïque | energía solar,fotovoltaica | energia solare,fotovoltaico | energia solar,fotovoltaica | aurinkoenergia,aurinkopaneeli
wind_energy: wind energy,wind power,wind turbine | windkraft,windenergie,windrad | énergie éolienne,éolienne | energía eólica | energia eolica | energia eólica | tuulivoima
power_plant: power plant,power station | kraftwerk,kraftwerke | centrale électrique | central eléctrica | centrale elettrica | usina,central elétrica | voimala,voimalaitos
noise: noise | lärm | bruit | ruido | rumore | ruído,barulho | melu
pollution: pollution | verschmutzung,umweltverschmutzung | pollution | contaminación,polución | inquinamento | poluição | saaste,saastuminen
emission: emission,emissions | emission,emissionen,abgase | émission,émissions | emisión,emisiones | emissione,emissioni | emissão,emissões | päästö,päästöt
air_quality: air quality | luftqualität,luftgüte | qualité de l'air | calidad del aire | qualità dell'aria | qualidade do ar | ilmanlaatu
environment: environment | umwelt | environnement | medio ambiente | ambiente | meio ambiente | ympäristö
"""),
    ("government", """
government: government | regierung | gouvernement | gobierno | governo | governo | hallitus
parliament: parliament | parlament,landtag | parlement | parlamento | parlamento | parlamento | eduskunta,parlamentti
election: election,elections | wahl,wahlen | élection,élections | elección,elecciones | elezione,elezioni | eleição,eleições | vaali,vaalit
vote: vote,votes,voting | stimme,abstimmung | scrutin | voto,votación | voto,votazione | voto,votação | äänestys,ääni
referendum: referendum | volksabstimmung,referendum | référendum | referéndum | referendum | referendo,plebiscito | kansanäänestys
mayor: mayor | bürgermeister,bürgermeisterin | maire | alcalde,alcaldesa | sindaco | prefeito | pormestari
council: council,city council | gemeinderat,stadtrat | conseil municipal | concejo,cabildo | consiglio comunale | conselho | valtuusto,kaupunginvaltuusto
budget: budget,budgets | haushalt,budget | budget,budgets | presupuesto,presupuestos | bilancio,bilanci | orçamento,orçamentos | talousarvio,budjetti
tax: tax,taxes,taxation | steuer,steuern,abgaben | impôt,impôts,taxe | impuesto,impuestos | tassa,tasse,imposta | imposto,impostos,taxa | vero,verot,verotus
finance: finance,finances | finanzen | finances | finanzas | finanza,finanze | finanças | rahoitus
law: law,laws,legislation | gesetz,gesetze,recht | loi,lois,droit | ley,leyes,derecho | legge,leggi,diritto | lei,leis,direito | laki,lait,lainsäädäntö
regulation: regulation,regulations,ordinance | verordnung,vorschrift | règlement,réglementation | reglamento,normativa | regolamento,normativa | regulamento,norma | asetus,määräys
permit: permit,permits,building permit | genehmigung,baugenehmigung,bewilligung | permis,permis de construire | permiso | permesso,concessione | alvará | lupa,rakennuslupa
license: license,licence | lizenz | licence | licencia | licenza | licença | lisenssi
passport: passport,passports | reisepass,pass | passeport | pasaporte | passaporto | passaporte | passi
border: border,borders | grenze,grenzen | frontière,frontières | frontera,fronteras | confine,frontiera | fronteira,fronteiras | raja,rajat
customs: customs | zoll | douane | aduana | dogana | alfândega | tulli
court: court,courts,tribunal | gericht,gerichte | tribunal,cour | tribunal,juzgado | tribunale,corte | tribunal | tuomioistuin,oikeus
prison: prison,jail | gefängnis,justizanstalt | prison,prisons | prisión,cárcel | carcere,prigione | prisão,cadeia | vankila
"""),
    ("economy", """
economy: economy | wirtschaft | économie | economía | economia | economia | talous
employment: employment,jobs,job | beschäftigung,arbeitsplätze,arbeit | emploi,emplois,travail | empleo,trabajo | occupazione,lavoro | emprego,trabalho | työllisyys,työpaikat,työ
unemployment: unemployment | arbeitslosigkeit | chômage | desempleo,paro | disoccupazione | desemprego | työttömyys
salary: salary,wages,income | gehalt,lohn,einkommen | salaire,revenu | salario,sueldo,ingresos | salario,stipendio,reddito | salário,renda | palkka,tulot
company: company,companies,business,enterprise | unternehmen,firma,betrieb | entreprise,entreprises,société | empresa,empresas | impresa,azienda,società | empresa,empresas | yritys,yritykset
industry: industry,industries | industrie | industrie,industries | industria,industrias | industria,industrie | indústria,indústrias | teollisuus
agriculture: agriculture,farming | landwirtschaft | agriculture | agricultura | agricoltura | agricultura | maatalous
farm: farm,farms | bauernhof,hof | ferme,fermes | granja,finca | fattoria,azienda agricola | fazenda,quinta | maatila,tila
tourism: tourism | tourismus,fremdenverkehr | tourisme | turismo | turismo | turismo | matkailu,turismi
trade: trade,commerce | handel | commerce,échanges | comercio | commercio | comércio | kauppa
price: price,prices | preis,preise | prix | precio,precios | prezzo,prezzi | preço,preços | hinta,hinnat
inflation: inflation | inflation,teuerung | inflation | inflación | inflazione | inflação | inflaatio
bank_finance: bank,banks | bank,banken | banque,banques | banco,bancos | banca,banche | banco,bancos | pankki,pankit
insurance: insurance | versicherung,versicherungen | assurance,assurances | seguro,seguros | assicurazione,assicurazioni | seguro,seguros | vakuutus,vakuutukset
pension: pension,retirement | pension,rente | retraite | pensión,jubilación | pensione | aposentadoria,pensão | eläke,eläkkeet
debt: debt,debts | schulden,verschuldung | dette,dettes | deuda,deudas | debito,debiti | dívida,dívidas | velka,velat
money: money | geld | argent | dinero | denaro,soldi | dinheiro | raha,rahat
credit: credit,loan | kredit,darlehen | crédit,prêt | crédito,préstamo | credito,prestito | crédito,empréstimo | luotto,laina
"""),
    ("social", """
population: population | bevölkerung,einwohner | population,habitants | población,habitantes | popolazione,abitanti | população,habitantes | väestö,asukkaat
census: census | volkszählung,zensus | recensement | censo | censimento | censo | väestönlaskenta
birth: birth,births | geburt,geburten | naissance,naissances | nacimiento,nacimientos | nascita,nascite | nascimento,nascimentos | syntymä,syntymät
death: death,deaths,mortality | tod,sterbefälle,mortalität | décès,mortalité | muerte,defunciones,mortalidad | morte,decessi,mortalità | morte,óbitos,mortalidade | kuolema,kuolleisuus
marriage: marriage,marriages | ehe,eheschließung,hochzeit | mariage,mariages | matrimonio,matrimonios | matrimonio,matrimoni | casamento,casamentos | avioliitto
family: family,families | familie,familien | famille,familles | familia,familias | famiglia,famiglie | família,famílias | perhe,perheet
child: child,children | kind,kinder | enfant,enfants | niño,niños,infancia | bambino,bambini,infanzia | criança,crianças,infância | lapsi,lapset
youth: youth,young people | jugend,jugendliche | jeunesse,jeunes | juventud,jóvenes | gioventù,giovani | juventude,jovens | nuoriso,nuoret
elderly: elderly,seniors | senioren,ältere menschen | personnes âgées,seniors | mayores,ancianos | anziani | idosos | vanhukset,ikäihmiset
migration: migration,immigration | migration,zuwanderung | migration,immigration | migración,inmigración | migrazione,immigrazione | migração,imigração | muuttoliike,maahanmuutto
refugee: refugee,refugees,asylum | flüchtling,flüchtlinge,asyl | réfugié,réfugiés,asile | refugiado,refugiados | rifugiato,rifugiati,profugo | refugiado,refugiados | pakolainen,pakolaiset,turvapaikka
housing: housing | wohnen,wohnbau | logement,habitat | vivienda | abitazione,edilizia | habitação,moradia | asuminen
poverty: poverty | armut | pauvreté | pobreza | povertà | pobreza | köyhyys
crime: crime,criminality | kriminalität,verbrechen | criminalité,délinquance | criminalidad,delincuencia,delito | criminalità,reati | criminalidade,crime | rikollisuus,rikos,rikokset
health: health,healthcare | gesundheit,gesundheitswesen | santé | salud,sanidad | salute,sanità | saúde | terveys,terveydenhuolto
disease: disease,diseases,illness | krankheit,krankheiten | maladie,maladies | enfermedad,enfermedades | malattia,malattie | doença,doenças | sairaus,sairaudet,tauti
vaccination: vaccination,vaccine,vaccines | impfung,impfungen,impfstoff | vaccination,vaccin | vacunación,vacuna | vaccinazione,vaccino | vacinação,vacina | rokotus,rokote
doctor: doctor,doctors,physician | arzt,ärzte,ärztin | médecin,docteur | médico,médicos,doctor | medico,medici,dottore | médico,médicos | lääkäri,lääkärit
nurse: nurse,nurses | krankenpfleger,pflege | infirmier,infirmière | enfermero,enfermera | infermiere,infermiera | enfermeiro,enfermeira | sairaanhoitaja
ambulance: ambulance | rettung,krankenwagen,rettungsdienst | ambulance,samu | ambulancia | ambulanza | ambulância | ambulanssi
"""),
    ("education_culture", """
education: education | bildung,ausbildung | éducation,enseignement | educación,enseñanza | istruzione,educazione | educação,ensino | koulutus,opetus
student: student,students | student,studenten,schüler | étudiant,étudiants,élève | estudiante,estudiantes,alumno | studente,studenti,alunno | estudante,estudantes,aluno | opiskelija,opiskelijat,oppilas
teacher: teacher,teachers | lehrer,lehrerin,lehrkräfte | enseignant,professeur | profesor,maestro,docente | insegnante,docente | professor,docente | opettaja,opettajat
sport: sport,sports | sport | sport,sports | deporte,deportes | sport | esporte,desporto | urheilu,liikunta
football: football,soccer | fußball | football,foot | fútbol | calcio | futebol | jalkapallo
swimming: swimming | schwimmen | natation | natación | nuoto | natação | uinti
tennis: tennis | tennis | tennis | tenis | tennis | tênis,ténis | tennis
running: running,jogging | laufen,joggen | course à pied,jogging | atletismo | corsa,podismo | corrida | juoksu
music: music | musik | musique | música | musica | música | musiikki
art: art,arts | kunst | art,arts | arte,artes | arte,arti | arte,artes | taide
festival: festival,festivals | festival,fest | festival,fête | festival,fiesta | festival,sagra | festival,festa | festivaali,juhla
event: event,events | veranstaltung,veranstaltungen,event | événement,événements,manifestation | evento,eventos | evento,eventi,manifestazione | evento,eventos | tapahtuma,tapahtumat
concert: concert,concerts | konzert,konzerte | concert,concerts | concierto,conciertos | concerto,concerti | concerto,show | konsertti,konsertit
exhibition: exhibition,exhibitions | ausstellung,ausstellungen | exposition,expositions | exposición,exposiciones | mostra,esposizione | exposição,exposições | näyttely,näyttelyt
history: history,historical | geschichte,historisch | histoire,historique | historia,histórico | storia,storico | história,histórico | historia,historiallinen
language: language,languages | sprache,sprachen | langue,langues | idioma,lengua,idiomas | lingua,lingue | idioma,língua | kieli,kielet
book: book,books | buch,bücher | livre,livres | libro,libros | libro,libri | livro,livros | kirja,kirjat
newspaper: newspaper,newspapers,press | zeitung,zeitungen,presse | journal,journaux,presse | periódico,prensa,diario | giornale,giornali,stampa | jornal,jornais,imprensa | sanomalehti,lehti
carnival: carnival | karneval,fasching | carnaval | carnaval | carnevale | carnaval | karnevaali
hiking: hiking,hiking trail | wandern,wanderweg | randonnée | senderismo | escursionismo | caminhada,trilha | retkeily,vaellus
sauna: sauna | sauna | sauna | sauna | sauna | sauna | sauna
"""),
    ("data_tech", """
data: data | daten | données | datos | dati | dados | data
dataset: dataset,datasets | datensatz,datensätze | jeu de données,jeux de données | conjunto de datos | set di dati,dataset | conjunto de dados | aineisto,tietoaineisto
statistics: statistics,statistical | statistik,statistiken | statistique,statistiques | estadística,estadísticas | statistica,statistiche | estatística,estatísticas | tilasto,tilastot
map: map,maps | karte,karten,stadtplan | carte,cartes,plan | mapa,mapas,plano | mappa,mappe,cartina | mapa,mapas | kartta,kartat
internet: internet,web | internet | internet,web | internet,web | internet,web | internet,web | internet,verkko
computer: computer,computers | computer,rechner | ordinateur,ordinateurs | ordenador,computadora | computer,elaboratore | computador,computadores | tietokone,tietokoneet
software: software,application,app | software,anwendung,app | logiciel,logiciels,application | software,aplicación | software,applicazione | software,aplicativo | ohjelmisto,sovellus
science: science,sciences | wissenschaft | science,sciences | ciencia,ciencias | scienza,scienze | ciência,ciências | tiede
research: research | forschung | recherche | investigación | ricerca | pesquisa,investigação | tutkimus
technology: technology | technologie,technik | technologie | tecnología | tecnologia | tecnologia | teknologia,tekniikka
telephone: telephone,phone | telefon | téléphone | teléfono | telefono | telefone | puhelin
radio: radio | radio,rundfunk | radio | radio | radio | rádio | radio
television: television,tv | fernsehen,tv | télévision | televisión | televisione | televisão | televisio
camera: camera,cameras | kamera,kameras | caméra,appareil photo | cámara | fotocamera,telecamera | câmera | kamera
sensor: sensor,sensors | sensor,sensoren | capteur,capteurs | sensor,sensores | sensore,sensori | sensor,sensores | anturi,sensori
website: website,websites | webseite,website | site web,site internet | sitio web,página web | sito web,sito internet | site,página web | verkkosivu,sivusto
"""),
    ("food", """
food: food | lebensmittel,essen,nahrung | alimentation,nourriture,aliments | alimento,alimentos,comida | cibo,alimenti,alimentari | alimento,alimentos,comida | ruoka,elintarvikkeet
bread: bread | brot | pain | pan | pane | pão | leipä
milk: milk | milch | lait | leche | latte | leite | maito
cheese: cheese | käse | fromage | queso | formaggio | queijo | juusto
meat: meat | fleisch | viande | carne | carne | carne | liha
fruit: fruit,fruits | obst,früchte | fruit,fruits | fruta,frutas | frutta,frutto | fruta,frutas | hedelmä,hedelmät
vegetable: vegetable,vegetables | gemüse | légume,légumes | verdura,verduras,hortaliza | verdura,verdure,ortaggi | legumes,verduras | vihannes,vihannekset
potato: potato,potatoes | kartoffel,kartoffeln,erdapfel | pomme de terre,pommes de terre | patata,papa | patata,patate | batata,batatas | peruna,perunat
tomato: tomato,tomatoes | tomate,tomaten,paradeiser | tomate,tomates | tomate,jitomate | pomodoro,pomodori | tomate,tomates | tomaatti,tomaatit
apple_fruit: apple,apples | apfel,äpfel | pomme,pommes | manzana,manzanas | mela,mele | maçã,maçãs | omena,omenat
orange_fruit: orange,oranges | orange,apfelsine | orange,oranges | naranja,naranjas | arancia,arance | laranja,laranjas | appelsiini,appelsiinit
pear: pear,pears | birne,birnen | poire,poires | pera,peras | pera,pere | pera,peras | päärynä
grape: grape,grapes | traube,trauben,weintraube | raisin,raisins | uva,uvas | uva | uva,uvas | viinirypäle,rypäle
strawberry: strawberry,strawberries | erdbeere,erdbeeren | fraise,fraises | fresa,fresas | fragola,fragole | morango,morangos | mansikka,mansikat
wine: wine,wines | wein,weine | vin,vins | vino,vinos | vino,vini | vinho,vinhos | viini,viinit
beer: beer,beers | bier,biere | bière,bières | cerveza,cervezas | birra,birre | cerveja,cervejas | olut,oluet
coffee: coffee | kaffee | café | café | caffè | café | kahvi
tea: tea | tee | thé | té | tè | chá | tee
honey: honey | honig | miel | miel | miele | mel | hunaja
egg: egg,eggs | ei,eier | œuf,œufs | huevo,huevos | uovo,uova | ovo,ovos | muna,munat
sugar: sugar | zucker | sucre | azúcar | zucchero | açúcar | sokeri
salt: salt | salz | sel | sal | sale | sal | suola
hot_dog: hot dog,hot dogs | hot dog | hot dog | hot dog,perrito caliente | hot dog | cachorro-quente | hodari,nakkisämpylä
orchard: orchard,orchards | obstgarten,streuobstwiese | verger,vergers | huerto,huertos | frutteto,frutteti | pomar,pomares | hedelmätarha
vineyard: vineyard,vineyards | weinberg,weingarten | vigne,vignoble | viñedo,viña | vigneto,vigna | vinha,vinhedo | viinitarha
apple_company: apple,apple inc |  |  |  |  |  |
orange_color: orange | orange | orange |  | arancione |  | oranssi
"""),
    ("time", """
year: year,years | jahr,jahre | année,an | año,años | anno,anni | ano,anos | vuosi,vuodet
month: month,months | monat,monate | mois | mes,meses | mese,mesi | mês,meses | kuukausi,kuukaudet
week: week,weeks | woche,wochen | semaine,semaines | semana,semanas | settimana,settimane | semana,semanas | viikko,viikot
day: day,days | tag,tage | jour,jours,journée | día,días | giorno,giorni | dia,dias | päivä,päivät
night: night,nights | nacht,nächte | nuit,nuits | noche,noches | notte,notti | noite,noites | yö,yöt
summer: summer | sommer | été | verano | estate | verão | kesä
winter: winter | winter | hiver | invierno | inverno | inverno | talvi
spring_season: spring | frühling,frühjahr | printemps | primavera | primavera | primavera | kevät
autumn: autumn,fall | herbst | automne | otoño | autunno | outono | syksy
holiday: holiday,holidays,vacation | urlaub,ferien,feiertag | vacances,congé,jour férié | vacaciones,festivo | vacanza,vacanze,ferie | férias,feriado | loma,lomat,juhlapäivä
"""),
    ("place_city", """
city_vienna: vienna | wien | vienne | viena | vienna | viena | wien
city_graz: graz | graz |  |  |  |  |
city_linz: linz | linz |  |  |  |  |
city_salzburg: salzburg | salzburg | salzbourg |  | salisburgo |  |
city_innsbruck: innsbruck | innsbruck |  |  |  |  |
city_dublin: dublin | dublin | dublin | dublín | dublino | dublim | dublin
city_cork: cork |  |  |  |  |  |
city_galway: galway |  |  |  |  |  |
city_limerick: limerick |  |  |  |  |  |
city_trento: trento | trient | trente | trento | trento | trento | trento
city_bolzano: bolzano | bozen |  |  | bolzano |  |
city_rovereto: rovereto |  |  |  | rovereto |  |
city_rome: rome | rom | rome | roma | roma | roma | rooma
city_milan: milan | mailand | milan | milán | milano | milão | milano
city_venice: venice | venedig | venise | venecia | venezia | veneza | venetsia
city_florence: florence | florenz | florence | florencia | firenze | florença | firenze
city_naples: naples | neapel | naples | nápoles | napoli | nápoles | napoli
city_turin: turin | turin | turin | turín | torino | turim | torino
city_paris: paris | paris | paris | parís | parigi | paris | pariisi
city_lyon: lyon | lyon | lyon | lyon | lione |  |
city_marseille: marseille | marseille | marseille | marsella | marsiglia | marselha |
city_toulouse: toulouse | toulouse | toulouse | toulouse |  |  |
city_nice: nice | nizza | nice | niza | nizza |  |
city_lisbon: lisbon | lissabon | lisbonne | lisboa | lisbona | lisboa | lissabon
city_porto: porto |  |  |  |  | porto |
city_coimbra: coimbra |  |  | coimbra |  | coimbra |
city_braga: braga |  |  |  |  | braga |
city_brasilia: brasilia | brasilia | brasilia | brasilia |  | brasília | brasilia
city_rio: rio de janeiro | rio de janeiro | rio de janeiro | río de janeiro,rio de janeiro | rio de janeiro | rio de janeiro | rio de janeiro
city_sao_paulo: sao paulo | sao paulo | sao paulo | são paulo,san pablo | san paolo | são paulo | sao paulo
city_salvador: salvador |  |  | salvador |  | salvador |
city_recife: recife |  |  |  |  | recife |
city_curitiba: curitiba |  |  |  |  | curitiba |
city_mexico_city: mexico city | mexiko-stadt | mexico | ciudad de méxico | città del messico | cidade do méxico |
city_guadalajara: guadalajara | guadalajara | guadalajara | guadalajara |  |  |
city_monterrey: monterrey |  |  | monterrey |  |  |
city_puebla: puebla |  |  | puebla |  |  |
city_helsinki: helsinki | helsinki | helsinki | helsinki | helsinki | helsinque,helsínquia | helsinki
city_espoo: espoo |  |  |  |  |  | espoo
city_tampere: tampere |  |  |  |  |  | tampere
city_turku: turku |  |  |  |  |  | turku
city_oulu: oulu |  |  |  |  |  | oulu
city_madrid: madrid | madrid | madrid | madrid | madrid | madri | madrid
city_barcelona: barcelona | barcelona | barcelone | barcelona | barcellona | barcelona | barcelona
city_seville: seville | sevilla | séville | sevilla | siviglia | sevilha | sevilla
city_berlin: berlin | berlin | berlin | berlín | berlino | berlim | berliini
city_munich: munich | münchen | munich | múnich | monaco di baviera | munique | münchen
city_hamburg: hamburg | hamburg | hambourg | hamburgo | amburgo | hamburgo | hampuri
city_london: london | london | londres | londres | londra | londres | lontoo
city_amsterdam: amsterdam | amsterdam | amsterdam | ámsterdam | amsterdam | amsterdã | amsterdam
city_brussels: brussels | brüssel | bruxelles | bruselas | bruxelles | bruxelas | bryssel
city_prague: prague | prag | prague | praga | praga | praga | praha
city_warsaw: warsaw | warschau | varsovie | varsovia | varsavia | varsóvia | varsova
city_budapest: budapest | budapest | budapest | budapest | budapest | budapeste | budapest
city_copenhagen: copenhagen | kopenhagen | copenhague | copenhague | copenaghen | copenhague | kööpenhamina
city_stockholm: stockholm | stockholm | stockholm | estocolmo | stoccolma | estocolmo | tukholma
city_oslo: oslo | oslo | oslo | oslo | oslo | oslo | oslo
city_athens: athens | athen | athènes | atenas | atene | atenas | ateena
"""),
    ("place_country", """
country_austria: austria | österreich | autriche | austria | austria | áustria | itävalta
country_ireland: ireland | irland | irlande | irlanda | irlanda | irlanda | irlanti
country_italy: italy | italien | italie | italia | italia | itália | italia
country_france: france | frankreich | france | francia | francia | frança | ranska
country_spain: spain | spanien | espagne | españa | spagna | espanha | espanja
country_portugal: portugal | portugal | portugal | portugal | portogallo | portugal | portugali
country_brazil: brazil | brasilien | brésil | brasil | brasile | brasil | brasilia
country_mexico: mexico | mexiko | mexique | méxico | messico | méxico | meksiko
country_finland: finland | finnland | finlande | finlandia | finlandia | finlândia | suomi
country_germany: germany | deutschland | allemagne | alemania | germania | alemanha | saksa
country_switzerland: switzerland | schweiz | suisse | suiza | svizzera | suíça | sveitsi
country_belgium: belgium | belgien | belgique | bélgica | belgio | bélgica | belgia
country_netherlands: netherlands,holland | niederlande,holland | pays-bas | países bajos,holanda | paesi bassi,olanda | países baixos,holanda | alankomaat,hollanti
country_poland: poland | polen | pologne | polonia | polonia | polônia | puola
country_hungary: hungary | ungarn | hongrie | hungría | ungheria | hungria | unkari
country_denmark: denmark | dänemark | danemark | dinamarca | danimarca | dinamarca | tanska
country_sweden: sweden | schweden | suède | suecia | svezia | suécia | ruotsi
country_norway: norway | norwegen | norvège | noruega | norvegia | noruega | norja
country_greece: greece | griechenland | grèce | grecia | grecia | grécia | kreikka
country_uk: united kingdom,great britain,britain | großbritannien,vereinigtes königreich | royaume-uni,grande-bretagne | reino unido,gran bretaña | regno unito,gran bretagna | reino unido,grã-bretanha | yhdistynyt kuningaskunta,iso-britannia
country_czechia: czechia,czech republic | tschechien | tchéquie,république tchèque | chequia,república checa | repubblica ceca,cechia | tchéquia,república tcheca | tšekki
country_slovenia: slovenia | slowenien | slovénie | eslovenia | slovenia | eslovênia | slovenia
country_slovakia: slovakia | slowakei | slovaquie | eslovaquia | slovacchia | eslováquia | slovakia
country_croatia: croatia | kroatien | croatie | croacia | croazia | croácia | kroatia
country_estonia: estonia | estland | estonie | estonia | estonia | estônia | viro,eesti
country_latvia: latvia | lettland | lettonie | letonia | lettonia | letônia | latvia
country_lithuania: lithuania | litauen | lituanie | lituania | lituania | lituânia | liettua
"""),
    ("local", """
local_hundezone:  | hundezone,hundezonen |  |  |  |  |
local_baumkataster:  | baumkataster |  |  |  |  |
local_kurzparkzone:  | kurzparkzone,kurzparkzonen |  |  |  |  |
local_gemeindebau:  | gemeindebau,gemeindebauten |  |  |  |  |
local_heuriger:  | heuriger,heurigen |  |  |  |  |
local_feinstaub:  | feinstaub |  |  |  |  |
local_muelltrennung:  | mülltrennung |  |  |  |  |
local_winterdienst:  | winterdienst,schneeräumung |  |  |  |  |
local_townland: townland,townlands |  |  |  |  |  |
local_greenway: greenway,greenways |  |  |  |  |  |
local_hurling: hurling |  |  |  |  |  |
local_gaeltacht: gaeltacht |  |  |  |  |  |
local_agriturismo:  |  |  |  | agriturismo,agriturismi |  |
local_malga:  |  |  |  | malga,malghe |  |
local_frazione:  |  |  |  | frazione,frazioni |  |
local_anagrafe:  |  |  |  | anagrafe |  |
local_catasto:  |  |  |  | catasto |  |
local_prefecture:  |  | préfecture |  |  |  |
local_canton:  |  | canton,cantons |  |  |  |
local_brocante:  |  | brocante,brocantes |  |  |  |
local_alcaldia:  |  |  | alcaldía |  |  |
local_padron:  |  |  | padrón |  |  |
local_ejido:  |  |  | ejido,ejidos |  |  |
local_tianguis:  |  |  | tianguis |  |  |
local_cenote:  |  |  | cenote,cenotes |  |  |
local_favela:  |  |  |  |  | favela,favelas |
local_freguesia:  |  |  |  |  | freguesia,freguesias |
local_sertao:  |  |  |  |  | sertão |
local_caatinga:  |  |  |  |  | caatinga |
local_moekki:  |  |  |  |  |  | mökki,mökit
local_ruska:  |  |  |  |  |  | ruska
local_kaamos:  |  |  |  |  |  | kaamos
"""),
]

#: Group hub concept; every other group member gets an edge to it.
GROUP_HUBS = {
    "animals": "animal",
    "nature": "nature",
    "weather": "weather",
    "city": "city",
    "facilities": "city",
    "transport": "traffic",
    "environment": "environment",
    "government": "government",
    "economy": "economy",
    "social": "population",
    "education_culture": "education",
    "data_tech": "data",
    "food": "food",
}
HUB_WEIGHT = 0.6

CITY_COUNTRY = {
    "city_vienna": "country_austria",
    "city_graz": "country_austria",
    "city_linz": "country_austria",
    "city_salzburg": "country_austria",
    "city_innsbruck": "country_austria",
    "city_dublin": "country_ireland",
    "city_cork": "country_ireland",
    "city_galway": "country_ireland",
    "city_limerick": "country_ireland",
    "city_trento": "country_italy",
    "city_bolzano": "country_italy",
    "city_rovereto": "country_italy",
    "city_rome": "country_italy",
    "city_milan": "country_italy",
    "city_venice": "country_italy",
    "city_florence": "country_italy",
    "city_naples": "country_italy",
    "city_turin": "country_italy",
    "city_paris": "country_france",
    "city_lyon": "country_france",
    "city_marseille": "country_france",
    "city_toulouse": "country_france",
    "city_nice": "country_france",
    "city_lisbon": "country_portugal",
    "city_porto": "country_portugal",
    "city_coimbra": "country_portugal",
    "city_braga": "country_portugal",
    "city_brasilia": "country_brazil",
    "city_rio": "country_brazil",
    "city_sao_paulo": "country_brazil",
    "city_salvador": "country_brazil",
    "city_recife": "country_brazil",
    "city_curitiba": "country_brazil",
    "city_mexico_city": "country_mexico",
    "city_guadalajara": "country_mexico",
    "city_monterrey": "country_mexico",
    "city_puebla": "country_mexico",
    "city_helsinki": "country_finland",
    "city_espoo": "country_finland",
    "city_tampere": "country_finland",
    "city_turku": "country_finland",
    "city_oulu": "country_finland",
    "city_madrid": "country_spain",
    "city_barcelona": "country_spain",
    "city_seville": "country_spain",
    "city_berlin": "country_germany",
    "city_munich": "country_germany",
    "city_hamburg": "country_germany",
    "city_london": "country_uk",
    "city_amsterdam": "country_netherlands",
    "city_brussels": "country_belgium",
    "city_prague": "country_czechia",
    "city_warsaw": "country_poland",
    "city_budapest": "country_hungary",
    "city_copenhagen": "country_denmark",
    "city_stockholm": "country_sweden",
    "city_oslo": "country_norway",
    "city_athens": "country_greece",
}
CITY_COUNTRY_WEIGHT = 0.9

#: Hand-picked relatedness edges (key, key, weight).
CURATED_EDGES = [
    ("apple_fruit", "orchard", 1.0),
    ("apple_fruit", "fruit", 0.9),
    ("apple_fruit", "tree", 0.6),
    ("apple_fruit", "pear", 0.5),
    ("orange_fruit", "fruit", 0.9),
    ("pear", "fruit", 0.8),
    ("pear", "orchard", 0.7),
    ("grape", "wine", 0.9),
    ("grape", "vineyard", 0.9),
    ("wine", "vineyard", 1.0),
    ("apple_company", "computer", 0.9),
    ("apple_company", "software", 0.8),
    ("apple_company", "technology", 0.8),
    ("apple_company", "telephone", 0.5),
    ("bench", "park", 0.8),
    ("bench", "garden", 0.6),
    ("bank_finance", "money", 0.9),
    ("bank_finance", "credit", 0.9),
    ("bank_finance", "finance", 0.8),
    ("bank_finance", "debt", 0.6),
    ("dog", "local_hundezone", 0.9),
    ("dog", "park", 0.5),
    ("dog", "cat", 0.5),
    ("tree", "local_baumkataster", 0.9),
    ("tree", "forest", 0.8),
    ("tree", "park", 0.6),
    ("parking", "local_kurzparkzone", 0.9),
    ("waste", "local_muelltrennung", 0.8),
    ("waste", "recycling", 0.9),
    ("snow", "local_winterdienst", 0.8),
    ("wine", "local_heuriger", 0.7),
    ("air_quality", "local_feinstaub", 0.9),
    ("air_quality", "pollution", 0.9),
    ("air_quality", "emission", 0.7),
    ("noise", "traffic", 0.6),
    ("climate", "emission", 0.7),
    ("climate", "temperature", 0.8),
    ("water", "river", 0.5),
    ("water", "drinking_water", 0.9),
    ("wastewater", "sewer", 0.9),
    ("harbor", "ferry", 0.8),
    ("harbor", "sea", 0.7),
    ("city_porto", "country_portugal", 0.9),
    ("bicycle", "local_greenway", 0.7),
    ("bicycle", "hiking", 0.4),
    ("farm", "agriculture", 0.9),
    ("market", "local_tianguis", 0.8),
    ("school", "education", 0.9),
    ("student", "university", 0.8),
    ("hospital", "health", 0.9),
    ("doctor", "hospital", 0.8),
    ("vaccination", "disease", 0.8),
    ("crime", "police", 0.8),
    ("fire_station", "accident", 0.4),
    ("election", "vote", 0.9),
    ("budget", "tax", 0.7),
    ("bus", "tram", 0.7),
    ("train", "station", 0.8),
    ("swimming", "swimming_pool", 0.9),
    ("football", "stadium", 0.8),
    ("grape", "local_heuriger", 0.5),
    ("forest", "hiking", 0.6),
    ("mountain", "hiking", 0.7),
    ("sauna", "swimming_pool", 0.4),
    ("carnival", "festival", 0.8),
]

#: Display-label overrides: (key, lang) -> label.  Defaults take the
#: first surface listed for the concept in that language.
LABEL_OVERRIDES = {
    ("apple_fruit", "en"): "apple (fruit)",
    ("apple_fruit", "de"): "Apfel (Frucht)",
    ("apple_company", "en"): "Apple Inc. (company)",
    ("apple_company", "de"): "Apple Inc. (Unternehmen)",
    ("orange_fruit", "en"): "orange (fruit)",
    ("orange_color", "en"): "orange (colour)",
    ("bank_finance", "en"): "bank (financial institution)",
    ("bank_finance", "de"): "Bank (Geldinstitut)",
    ("bench", "en"): "bench (seat)",
    ("bench", "de"): "Bank (Sitzbank)",
    ("harbor", "en"): "harbour (port)",
    ("harbor", "pt"): "porto (porto marítimo)",
    ("city_porto", "en"): "Porto (city)",
    ("city_porto", "pt"): "Porto (cidade)",
    ("city_brasilia", "fi"): "Brasília (kaupunki)",
    ("country_brazil", "fi"): "Brasilia (valtio)",
    ("shop", "fi"): "kauppa (myymälä)",
    ("trade", "fi"): "kauppa (kaupankäynti)",
}


def parse_table() -> tuple[dict[str, dict[str, list[str]]], dict[str, str]]:
    """Returns (concepts[key][lang] = surfaces, group_of[key])."""
    concepts: dict[str, dict[str, list[str]]] = {}
    group_of: dict[str, str] = {}
    for group, block in TABLE:
        for line in block.strip().splitlines():
            line = line.strip()
            if not line:
                continue
            key, _, cells = line.partition(":")
            key = key.strip()
            if key in concepts:
                raise SystemExit(f"duplicate concept key {key}")
            parts = [cell.strip() for cell in cells.split("|")]
            if len(parts) != len(LANG_ORDER):
                raise SystemExit(
                    f"{key}: expected {len(LANG_ORDER)} cells, got {len(parts)}"
                )
            by_lang: dict[str, list[str]] = {}
            for lang, cell in zip(LANG_ORDER, parts):
                surfaces = [s.strip() for s in cell.split(",") if s.strip()]
                if surfaces:
                    by_lang[lang] = surfaces
            if not by_lang:
                raise SystemExit(f"{key}: no surfaces at all")
            concepts[key] = by_lang
            group_of[key] = group
    return concepts, group_of


def main() -> None:
    concepts, group_of = parse_table()
    keys = sorted(concepts)
    concept_id = {key: f"c:{i + 1:08d}" for i, key in enumerate(keys)}

    # Lexicon: senses per normalized (surface, lang), uniform priors.
    senses: dict[tuple[str, str], list[str]] = defaultdict(list)
    for key in keys:
        for lang, surfaces in concepts[key].items():
            for surface in surfaces:
                normalized = " ".join(normalize_tokens(surface))
                if len(normalized.split(" ")) > 5:
                    raise SystemExit(f"{key}: surface too long: {surface!r}")
                cell = senses[(normalized, lang)]
                if concept_id[key] not in cell:
                    cell.append(concept_id[key])

    lexicon_lines = []
    for (surface, lang), ids in sorted(senses.items()):
        prior = 1.0 / len(ids)
        for cid in sorted(ids):
            lexicon_lines.append(f"{surface}\t{lang}\t{cid}\t{prior:.6g}")
    (DATA / "lexicon.tsv").write_text(
        "\n".join(lexicon_lines) + "\n", encoding="utf-8"
    )

    # Graph: group hubs, city-country, curated extras.
    edges: dict[tuple[str, str], float] = {}

    def add_edge(a_key: str, b_key: str, weight: float) -> None:
        a, b = concept_id[a_key], concept_id[b_key]
        if a == b:
            return
        pair = (a, b) if a < b else (b, a)
        edges[pair] = max(edges.get(pair, 0.0), weight)

    for key, group in group_of.items():
        hub = GROUP_HUBS.get(group)
        if hub and key != hub:
            add_edge(key, hub, HUB_WEIGHT)
    for city, country in CITY_COUNTRY.items():
        add_edge(city, country, CITY_COUNTRY_WEIGHT)
    for a_key, b_key, weight in CURATED_EDGES:
        add_edge(a_key, b_key, weight)

    graph_lines = [
        f"{a}\t{b}\t{weight:.6g}" for (a, b), weight in sorted(edges.items())
    ]
    (DATA / "concept_graph.tsv").write_text(
        "\n".join(graph_lines) + "\n", encoding="utf-8"
    )

    # Labels: default to the first surface per language.
    label_lines = []
    for key in keys:
        for lang in LANG_ORDER:
            surfaces = concepts[key].get(lang)
            if not surfaces:
                continue
            label = LABEL_OVERRIDES.get((key, lang), surfaces[0])
            label_lines.append(f"{concept_id[key]}\t{lang}\t{label}")
    (DATA / "concept_labels.tsv").write_text(
        "\n".join(label_lines) + "\n", encoding="utf-8"
    )

    # Language profiles from the committed training texts.
    profiles_dir = DATA / "profiles"
    profiles_dir.mkdir(exist_ok=True)
    for path in sorted((DATA / "training").glob("*.txt")):
        profile = build_profile(path.read_text(encoding="utf-8"), path.stem)
        write_profile(profile, profiles_dir / f"{path.stem}.profile")

    surface_count = len(lexicon_lines)
    print(
        f"{len(keys)} concepts, {len(senses)} surface keys, "
        f"{surface_count} lexicon rows, {len(edges)} edges"
    )
    key_index = {key: concept_id[key] for key in keys}
    for probe in ("dog", "city_vienna", "apple_fruit", "apple_company", "orchard"):
        print(f"  {probe} -> {key_index[probe]}")


if __name__ == "__main__":
    main()
