#include "taucov/dataio.hpp"

namespace taucov {

// Published reference tables, digit-for-digit as printed (decimal commas,
// ";" separated). Table 2 is asymmetric in print and is preserved that way;
// reconciliation is the comparison report's job, never the loader's.

namespace {

constexpr const char* kTable1 =
    "Series Name;2000;2001;2002;2003;2004;2005;2006;2007;2008;2009;2010;2011;2012;2013;2014;2015\n"
    "Forest area (sq. km);26372,9;26392,99;26413,08;26433,17;26453,26;26473,35;26493,44;26513,53;26533,62;26553,71;26573,8;26595,82;26617,84;26639,86;26661,88;26683,9\n"
    "CO2 emissions (metric tons per capita);12,01065269;12,01181802;11,6241027;12,04336087;12,10540157;11,750804;11,77860313;12,00330783;11,39282817;10,64445418;10,71659406;10,4010178;10,09153928;9,620257259;9,264302843;9,400668002\n"
    "Electric power consumption (kWh per capita);5703,816739;5892,172595;5894,233119;6074,849142;6230,398228;6357,421095;6528,53015;6518,217413;6489,126257;6139,35206;6348,424398;6298,727678;6304,571923;6284,790806;6258,891037;6268,891066\n"
    "GDP (current US$);61828166496;67808032980;82196001051;1,0009E+11;1,19814E+11;1,37143E+11;1,56264E+11;1,90184E+11;2,36816E+11;2,07434E+11;2,0907E+11;2,29563E+11;2,08858E+11;2,11686E+11;2,09359E+11;1,88033E+11\n"
    "Agriculture, forestry, and fishing, value added (% of GDP);3,250528331;3,203527086;2,659586723;2,440027314;2,415394613;2,284635292;2,164955432;2,088905575;1,919927972;1,756787513;1,540596113;1,982510992;2,251185645;2,364771166;2,413452542;2,211213873\n"
    "Industry (including construction), value added (% of GDP);33,49120748;33,90920025;33,2092894;32,34225338;33,57974959;33,61719819;34,33321599;34,18273662;33,65763346;32,98769447;33,17075187;33,65057382;32,9223275;32,64607051;33,83935076;33,7818228\n"
    "Exports of goods and services (% of GDP);48,09098982;48,85651186;45,0041286;46,72804779;57,05783989;61,81322686;64,87542344;66,10076919;62,95164809;58,34542981;65,54300541;70,82186719;75,64618657;76,05838162;81,95427457;80,55877811\n"
    "Imports of goods and services (% of GDP);49,95534908;50,1559443;46,33052172;48,24548106;56,43112009;59,48473354;62,15295843;63,67824812;60,79085103;54,45181472;62,48590613;67,04095169;70,88267001;70,36403543;75,6207076;74,61688537\n";

constexpr const char* kTable2 =
    "PIRSON;Forest area (sq. km);CO2 emissions (metric tons per capita);Electric power consumption (kWh per capita);GDP (current US$);Agriculture, forestry, and fishing, value added (% of GDP);Industry (including construction), value added (% of GDP);Exports of goods and services (% of GDP);Imports of goods and services (% of GDP)\n"
    "Forest area (sq. km);1;0,804915995;-0,370651112;-0,170300938;0,706956118;0,66083114;0,551427119;0,007525423\n"
    "CO2 emissions (metric tons per capita);0,804915995;1;0,15519434;0,321520301;0,902132858;0,897826088;0,878669481;0,501046148\n"
    "Electric power consumption (kWh per capita);-0,370651112;0,15519434;1;0,452129202;0,394029786;0,452129202;0,566067763;0,925768597\n"
    "GDP (current US$);-0,170300938;0,321520301;0,973262207;1;0,5736343;0,622749449;0,713523219;0,97723901\n"
    "Agriculture, forestry, and fishing, value added (% of GDP);0,706956118;0,902132858;0,394029786;0,5736343;1;0,99740355;0,972713669;0,710828029\n"
    "Industry (including construction), value added (% of GDP);0,66083114;0,897826088;0,452129202;0,622749449;0,99740355;1;0,156492808;0,755290483\n"
    "Exports of goods and services (% of GDP);0,551427119;0,878669481;0,566067763;0,713523219;0,972713669;0,156492808;1;0,835274197\n"
    "Imports of goods and services (% of GDP);0,007525423;0,501046148;0,925768597;0,97723901;0,710828029;0,755290483;0,835274197;1\n";

constexpr const char* kTable3 =
    "tau_ij;Forest area (sq. km);CO2 emissions (metric tons per capita);Electric power consumption (kWh per capita);GDP (current US$);Agriculture, forestry, and fishing, value added (% of GDP);Industry (including construction), value added (% of GDP);Exports of goods and services (% of GDP);Imports of goods and services (% of GDP)\n"
    "Forest area (sq. km);1;0,553868219;-0,998710332;-0,727421078;0,988376967;0,998100945;0,729853183;0,960387536\n"
    "CO2 emissions (metric tons per capita);0,553868219;1;-0,512904347;-0,476076253;0,427860804;0,588709296;0,968931039;0,301603765\n"
    "Electric power consumption (kWh per capita);-0,998710332;-0,512904347;1;0,725685841;-0,994797559;-0,994873572;-0,695541451;-0,973036711\n"
    "GDP (current US$);-0,727421078;-0,476076253;0,725685841;1;-0,722099758;-0,750088327;-0,610248872;-0,681398774\n"
    "Agriculture, forestry, and fishing, value added (% of GDP);0,988376967;0,427860804;-0,994797559;-0,722099758;1;0,981253718;0,623016088;0,990518216\n"
    "Industry (including construction), value added (% of GDP);0,998100945;0,588709296;-0,994873572;-0,750088327;0,981253718;1;0,760629553;0,946776578\n"
    "Exports of goods and services (% of GDP);0,729853183;0,968931039;-0,695541451;-0,610248872;0,623016088;0,760629553;1;0,511734557\n"
    "Imports of goods and services (% of GDP);0,960387536;0,301603765;-0,973036711;-0,681398774;0,990518216;0,946776578;0,511734557;1\n";

} // namespace

std::string_view fixture_csv_text(FixtureName name) {
    switch (name) {
        case FixtureName::table1: return kTable1;
        case FixtureName::table2: return kTable2;
        case FixtureName::table3: return kTable3;
    }
    throw domain_error("unknown fixture");
}

} // namespace taucov
