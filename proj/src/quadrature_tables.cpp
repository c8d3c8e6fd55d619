// Generated by tools/polish_triangle_rules.py; do not edit by hand.
// Orbit structure from Dunavant (1985); parameters refined to 60 digits
// against the exact monomial moments a! b! / (a + b + 2)!.

#include "qge/quadrature_tables.hpp"

namespace qge::quadrature::detail {

// degree 1, 1 points
constexpr Orbit kDegree1[] = {
    {OrbitKind::centroid, 0.0, 0.0, 5.0000000000000000000e-1},
};

// degree 2, 3 points
constexpr Orbit kDegree2[] = {
    {OrbitKind::s21, 1.6666666666666666667e-1, 0.0, 1.6666666666666666667e-1},
};

// degree 3, 4 points
constexpr Orbit kDegree3[] = {
    {OrbitKind::centroid, 0.0, 0.0, -2.8125000000000000000e-1},
    {OrbitKind::s21, 2.0000000000000000000e-1, 0.0, 2.6041666666666666667e-1},
};

// degree 4, 6 points
constexpr Orbit kDegree4[] = {
    {OrbitKind::s21, 4.4594849091596488632e-1, 0.0, 1.1169079483900573285e-1},
    {OrbitKind::s21, 9.1576213509770743460e-2, 0.0, 5.4975871827660933819e-2},
};

// degree 5, 7 points
constexpr Orbit kDegree5[] = {
    {OrbitKind::centroid, 0.0, 0.0, 1.1250000000000000000e-1},
    {OrbitKind::s21, 4.7014206410511508977e-1, 0.0, 6.6197076394253090369e-2},
    {OrbitKind::s21, 1.0128650732345633880e-1, 0.0, 6.2969590272413576298e-2},
};

// degree 6, 12 points
constexpr Orbit kDegree6[] = {
    {OrbitKind::s21, 2.4928674517091042129e-1, 0.0, 5.8393137863189683013e-2},
    {OrbitKind::s21, 6.3089014491502228340e-2, 0.0, 2.5422453185103408460e-2},
    {OrbitKind::s111, 3.1035245103378440542e-1, 6.3650249912139864723e-1, 4.1425537809186787597e-2},
};

// degree 7, 13 points
constexpr Orbit kDegree7[] = {
    {OrbitKind::centroid, 0.0, 0.0, -7.4785022233840875315e-2},
    {OrbitKind::s21, 2.6034596607903982693e-1, 0.0, 8.7807628716603905877e-2},
    {OrbitKind::s21, 6.5130102902215811538e-2, 0.0, 2.6673617804419245635e-2},
    {OrbitKind::s111, 3.1286549600487386141e-1, 6.3844418856980972680e-1, 3.8556880445128570130e-2},
};

// degree 8, 16 points
constexpr Orbit kDegree8[] = {
    {OrbitKind::centroid, 0.0, 0.0, 7.2157803838893584126e-2},
    {OrbitKind::s21, 1.7056930775176020662e-1, 0.0, 5.1608685267359125141e-2},
    {OrbitKind::s21, 5.0547228317030975458e-2, 0.0, 1.6229248811599040155e-2},
    {OrbitKind::s21, 4.5929258829272315603e-1, 0.0, 4.7545817133642312397e-2},
    {OrbitKind::s111, 2.6311282963463811342e-1, 7.2849239295540428124e-1, 1.3615157087217497132e-2},
};

// degree 9, 19 points
constexpr Orbit kDegree9[] = {
    {OrbitKind::centroid, 0.0, 0.0, 4.8567898141399416910e-2},
    {OrbitKind::s21, 4.8968251919873762778e-1, 0.0, 1.5667350113569535268e-2},
    {OrbitKind::s21, 4.3708959149293663727e-1, 0.0, 3.8913770502387139658e-2},
    {OrbitKind::s21, 1.8820353561903273024e-1, 0.0, 3.9823869463605126516e-2},
    {OrbitKind::s21, 4.4729513394452709865e-2, 0.0, 1.2788837829349015631e-2},
    {OrbitKind::s111, 2.2196298916076569568e-1, 7.4119859878449802069e-1, 2.1641769688644688645e-2},
};

// degree 10, 25 points
constexpr Orbit kDegree10[] = {
    {OrbitKind::centroid, 0.0, 0.0, 4.5408995191376790048e-2},
    {OrbitKind::s21, 4.8557763338365737737e-1, 0.0, 1.8362978878233352359e-2},
    {OrbitKind::s21, 1.0948157548503705480e-1, 0.0, 2.2660529717763967391e-2},
    {OrbitKind::s111, 1.4170721941487995476e-1, 3.0793983876412095017e-1, 3.6378958422710054302e-2},
    {OrbitKind::s111, 2.5003534762686386074e-2, 2.4667256063990269392e-1, 1.4163621265528742418e-2},
    {OrbitKind::s111, 9.5408154002994575802e-3, 6.6803251012200265774e-2, 4.7108334818664117300e-3},
};

// degree 12, 33 points
constexpr Orbit kDegree12[] = {
    {OrbitKind::s21, 4.8821738977380488256e-1, 0.0, 1.2865533220227667709e-2},
    {OrbitKind::s21, 4.3972439229446027298e-1, 0.0, 2.1846272269019201068e-2},
    {OrbitKind::s21, 2.7121038501211592235e-1, 0.0, 3.1429112108942550177e-2},
    {OrbitKind::s21, 1.2757614554158592467e-1, 0.0, 1.7398056465354471495e-2},
    {OrbitKind::s21, 2.1317350453210370247e-2, 0.0, 3.0831305257795086169e-3},
    {OrbitKind::s111, 1.1534349453469799917e-1, 2.7571326968551419397e-1, 2.0185778883190464759e-2},
    {OrbitKind::s111, 2.2838332222257029610e-2, 2.8132558098993954825e-1, 1.1178386601151722856e-2},
    {OrbitKind::s111, 2.5734050548330228168e-2, 1.1625191590759714124e-1, 8.6581155543294461858e-3},
};

// degree 13, 37 points
constexpr Orbit kDegree13[] = {
    {OrbitKind::centroid, 0.0, 0.0, 2.6260461700400938845e-2},
    {OrbitKind::s21, 4.9504818493970464209e-1, 0.0, 5.6400726046647740760e-3},
    {OrbitKind::s21, 4.6871663510957390817e-1, 0.0, 1.5711759181227158828e-2},
    {OrbitKind::s21, 4.1452133680127663321e-1, 0.0, 2.3536251252097149372e-2},
    {OrbitKind::s21, 2.2939957204283130309e-1, 0.0, 2.3681793268177258047e-2},
    {OrbitKind::s21, 1.1442449519633009088e-1, 0.0, 1.5583764522896912462e-2},
    {OrbitKind::s21, 2.4811391363458970952e-2, 0.0, 3.9878857325371832460e-3},
    {OrbitKind::s111, 9.4853828379578703502e-2, 2.6879499705876098318e-1, 1.8424201364366117969e-2},
    {OrbitKind::s111, 1.8100773278806960051e-2, 2.9173006673428774708e-1, 8.7007316519110453904e-3},
    {OrbitKind::s111, 2.2233076674090099130e-2, 1.2635738549166872057e-1, 7.7608934195224621512e-3},
};

// degree 14, 42 points
constexpr Orbit kDegree14[] = {
    {OrbitKind::s21, 4.8896391036217863868e-1, 0.0, 1.0941790684714445320e-2},
    {OrbitKind::s21, 4.1764471934045392251e-1, 0.0, 1.6394176772062675321e-2},
    {OrbitKind::s21, 2.7347752830883865975e-1, 0.0, 2.5887052253645793157e-2},
    {OrbitKind::s21, 1.7720553241254343696e-1, 0.0, 2.1081294368496508769e-2},
    {OrbitKind::s21, 6.1799883090872601267e-2, 0.0, 7.2168498348883338009e-3},
    {OrbitKind::s21, 1.9390961248701048178e-2, 0.0, 2.4617018012000408409e-3},
    {OrbitKind::s111, 5.7124757403647939036e-2, 1.7226668782135557838e-1, 1.2332876606281836981e-2},
    {OrbitKind::s111, 9.2916249356971824758e-2, 3.3686145979634500174e-1, 1.9285755393530341614e-2},
    {OrbitKind::s111, 1.4646950055654409671e-2, 2.9837288213625775297e-1, 7.2181540567669202480e-3},
    {OrbitKind::s111, 1.2683309328720250872e-3, 1.1897449769695684540e-1, 2.5051144192503358849e-3},
};

// degree 17, 61 points
constexpr Orbit kDegree17[] = {
    {OrbitKind::centroid, 0.0, 0.0, 1.6718599645401465120e-2},
    {OrbitKind::s21, 4.9717054055677397105e-1, 0.0, 2.5467077202534036305e-3},
    {OrbitKind::s21, 4.8217632262462466584e-1, 0.0, 7.3354322638190119673e-3},
    {OrbitKind::s21, 4.5023996902078172694e-1, 0.0, 1.2175439176836140478e-2},
    {OrbitKind::s21, 4.0026623937739693141e-1, 0.0, 1.5553775434484738132e-2},
    {OrbitKind::s21, 2.5214126797095250632e-1, 0.0, 1.5628555609310242863e-2},
    {OrbitKind::s21, 1.6204700465846141669e-1, 0.0, 1.2407827169832434143e-2},
    {OrbitKind::s21, 7.5875882260745792384e-2, 0.0, 7.0280365352785315340e-3},
    {OrbitKind::s21, 1.5654726967821813614e-2, 0.0, 1.5973380868894116836e-3},
    {OrbitKind::s111, 1.0186928826919004255e-2, 3.3431986736365779457e-1, 4.0598276594962521299e-3},
    {OrbitKind::s111, 1.3544087167103610633e-1, 2.9222153779694371270e-1, 1.3402871141581253717e-2},
    {OrbitKind::s111, 5.4423924290582479254e-2, 3.1957488542318973486e-1, 9.2299966054110290273e-3},
    {OrbitKind::s111, 1.2868560833636810448e-2, 1.9070422419229173683e-1, 4.2384342671641992736e-3},
    {OrbitKind::s111, 6.7165782413524393673e-2, 1.8048321164874637378e-1, 9.1463983850124136632e-3},
    {OrbitKind::s111, 1.4663182224828258979e-2, 8.0711313679563797027e-2, 3.3328160020826507867e-3},
};

// degree 19, 73 points
constexpr Orbit kDegree19[] = {
    {OrbitKind::centroid, 0.0, 0.0, 1.6453165694459336310e-2},
    {OrbitKind::s21, 4.8960998707300637982e-1, 0.0, 5.1653659456360226300e-3},
    {OrbitKind::s21, 4.5453689269789269344e-1, 0.0, 1.1193623631508196491e-2},
    {OrbitKind::s21, 4.0141668064943120825e-1, 0.0, 1.5133062934734042799e-2},
    {OrbitKind::s21, 2.5555165440309759172e-1, 0.0, 1.5245483901098898239e-2},
    {OrbitKind::s21, 1.7707794215212953306e-1, 0.0, 1.2079606370820454750e-2},
    {OrbitKind::s21, 1.1006105322795188827e-1, 0.0, 8.0254017934004323139e-3},
    {OrbitKind::s21, 5.5528624251839638006e-2, 0.0, 4.0422901308920287761e-3},
    {OrbitKind::s21, 1.2621863777228671431e-2, 0.0, 1.0396810137423908589e-3},
    {OrbitKind::s111, 3.6114178484121073309e-3, 3.9575478735694262846e-1, 1.9424384524906866503e-3},
    {OrbitKind::s111, 1.3446675453077973606e-1, 3.0792998388043625998e-1, 1.2787080306010955134e-2},
    {OrbitKind::s111, 1.4446025776114744319e-2, 2.6456694840652015543e-1, 4.4404517866690264902e-3},
    {OrbitKind::s111, 4.6933578838178423922e-2, 3.5853935220595069746e-1, 8.0622733808656941497e-3},
    {OrbitKind::s111, 2.8611203505667677709e-3, 1.5780740596859474447e-1, 1.2459709087453496417e-3},
    {OrbitKind::s111, 2.2386142409791575055e-1, 7.5050596975910907638e-2, 9.1214200594752880853e-3},
    {OrbitKind::s111, 3.4647074816760033726e-2, 1.4242160111338334694e-1, 5.1292818680992551251e-3},
    {OrbitKind::s111, 1.0161119296278253108e-2, 6.5494628082937722095e-2, 1.8999644276509552429e-3},
};

const std::span<const Orbit> tabulated_rule(int degree) {
  switch (degree) {
    case 1: return kDegree1;
    case 2: return kDegree2;
    case 3: return kDegree3;
    case 4: return kDegree4;
    case 5: return kDegree5;
    case 6: return kDegree6;
    case 7: return kDegree7;
    case 8: return kDegree8;
    case 9: return kDegree9;
    case 10: return kDegree10;
    case 12: return kDegree12;
    case 13: return kDegree13;
    case 14: return kDegree14;
    case 17: return kDegree17;
    case 19: return kDegree19;
    default: return {};
  }
}

}  // namespace qge::quadrature::detail
