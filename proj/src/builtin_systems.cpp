// Hand-checked transcriptions of the stage recursions for SG_{2,2} and
// SG_{2,3}.  Class variable order is (a, b, c, d) = (chain, two-above-one,
// single relation, antichain) per labeled representative; every polynomial
// is homogeneous of degree equal to the piece count (3 resp. 6).
//
// Spot checks wired into tests: applying the (2,2) system to
// (a,b,c,d) = (5,12,6,24) must give a = 7705, b = 75648, c = 179424,
// d = 2492616, and the (2,3) system at (1,0,0,0) gives the stage-1 row
// (140, 918, 966, 7458).

#include <stdexcept>

#include "sgao/recur.hpp"

namespace sgao {

namespace {

struct Term {
    int c;
    std::uint8_t e[4];  // exponents of a, b, c, d
};

Polynomial from_terms(const Term* t, std::size_t n) {
    Polynomial p(4);
    for (std::size_t i = 0; i < n; ++i)
        p.add_term({t[i].e[0], t[i].e[1], t[i].e[2], t[i].e[3]}, t[i].c);
    return p;
}

// ---- (d, b) = (2, 2), degree 3 ----

constexpr Term kA22[] = {
    {5, {3, 0, 0, 0}}, {8, {2, 1, 0, 0}}, {6, {2, 0, 1, 0}},
    {3, {1, 2, 0, 0}}, {4, {1, 1, 1, 0}}, {1, {1, 0, 2, 0}},
};

constexpr Term kB22[] = {
    {12, {3, 0, 0, 0}}, {35, {2, 1, 0, 0}}, {24, {2, 0, 1, 0}},
    {30, {1, 2, 0, 0}}, {34, {1, 1, 1, 0}}, {4, {1, 0, 2, 0}},
    {8, {0, 3, 0, 0}},  {12, {0, 2, 1, 0}}, {3, {0, 1, 2, 0}},
};

constexpr Term kC22[] = {
    {6, {3, 0, 0, 0}},  {26, {2, 1, 0, 0}}, {39, {2, 0, 1, 0}}, {9, {2, 0, 0, 1}},
    {30, {1, 2, 0, 0}}, {76, {1, 1, 1, 0}}, {12, {1, 1, 0, 1}}, {40, {1, 0, 2, 0}},
    {6, {1, 0, 1, 1}},  {10, {0, 3, 0, 0}}, {33, {0, 2, 1, 0}}, {4, {0, 2, 0, 1}},
    {30, {0, 1, 2, 0}}, {4, {0, 1, 1, 1}},  {7, {0, 0, 3, 0}},  {1, {0, 0, 2, 1}},
};

constexpr Term kD22[] = {
    {24, {3, 0, 0, 0}},  {126, {2, 1, 0, 0}}, {180, {2, 0, 1, 0}}, {54, {2, 0, 0, 1}},
    {198, {1, 2, 0, 0}}, {540, {1, 1, 1, 0}}, {144, {1, 1, 0, 1}}, {360, {1, 0, 2, 0}},
    {180, {1, 0, 1, 1}}, {18, {1, 0, 0, 2}},  {92, {0, 3, 0, 0}},  {354, {0, 2, 1, 0}},
    {84, {0, 2, 0, 1}},  {438, {0, 1, 2, 0}}, {192, {0, 1, 1, 1}}, {18, {0, 1, 0, 2}},
    {172, {0, 0, 3, 0}}, {102, {0, 0, 2, 1}}, {18, {0, 0, 1, 2}},  {1, {0, 0, 0, 3}},
};

// ---- (d, b) = (2, 3), degree 6 ----

constexpr Term kA23[] = {
    {140, {6, 0, 0, 0}},  {644, {5, 1, 0, 0}},  {588, {5, 0, 1, 0}},  {45, {5, 0, 0, 1}},
    {1141, {4, 2, 0, 0}}, {1988, {4, 1, 1, 0}}, {132, {4, 1, 0, 1}},  {812, {4, 0, 2, 0}},
    {84, {4, 0, 1, 1}},   {978, {3, 3, 0, 0}},  {2445, {3, 2, 1, 0}}, {143, {3, 2, 0, 1}},
    {1908, {3, 1, 2, 0}}, {176, {3, 1, 1, 1}},  {460, {3, 0, 3, 0}},  {50, {3, 0, 2, 1}},
    {407, {2, 4, 0, 0}},  {1300, {2, 3, 1, 0}}, {68, {2, 3, 0, 1}},   {1455, {2, 2, 2, 0}},
    {122, {2, 2, 1, 1}},  {668, {2, 1, 3, 0}},  {68, {2, 1, 2, 1}},   {104, {2, 0, 4, 0}},
    {12, {2, 0, 3, 1}},   {66, {1, 5, 0, 0}},   {253, {1, 4, 1, 0}},  {12, {1, 4, 0, 1}},
    {362, {1, 3, 2, 0}},  {28, {1, 3, 1, 1}},   {239, {1, 2, 3, 0}},  {23, {1, 2, 2, 1}},
    {72, {1, 1, 4, 0}},   {8, {1, 1, 3, 1}},    {8, {1, 0, 5, 0}},    {1, {1, 0, 4, 1}},
};

constexpr Term kB23[] = {
    {918, {6, 0, 0, 0}},   {5360, {5, 1, 0, 0}},  {4932, {5, 0, 1, 0}},  {504, {5, 0, 0, 1}},
    {12403, {4, 2, 0, 0}}, {21524, {4, 1, 1, 0}}, {1905, {4, 1, 0, 1}},  {8606, {4, 0, 2, 0}},
    {1200, {4, 0, 1, 1}},  {14634, {3, 3, 0, 0}}, {35910, {3, 2, 1, 0}}, {2786, {3, 2, 0, 1}},
    {26784, {3, 1, 2, 0}}, {3260, {3, 1, 1, 1}},  {5840, {3, 0, 3, 0}},  {776, {3, 0, 2, 1}},
    {9338, {2, 4, 0, 0}},  {28846, {2, 3, 1, 0}}, {1988, {2, 3, 0, 1}},  {30228, {2, 2, 2, 0}},
    {3284, {2, 2, 1, 1}},  {12248, {2, 1, 3, 0}}, {1502, {2, 1, 2, 1}},  {1514, {2, 0, 4, 0}},
    {192, {2, 0, 3, 1}},   {3072, {1, 5, 0, 0}},  {11230, {1, 4, 1, 0}}, {696, {1, 4, 0, 1}},
    {14774, {1, 3, 2, 0}}, {1456, {1, 3, 1, 1}},  {8426, {1, 2, 3, 0}},  {962, {1, 2, 2, 1}},
    {1968, {1, 1, 4, 0}},  {236, {1, 1, 3, 1}},   {140, {1, 0, 5, 0}},   {16, {1, 0, 4, 1}},
    {409, {0, 6, 0, 0}},   {1704, {0, 5, 1, 0}},  {96, {0, 5, 0, 1}},    {2652, {0, 4, 2, 0}},
    {240, {0, 4, 1, 1}},   {1906, {0, 3, 3, 0}},  {204, {0, 3, 2, 1}},   {633, {0, 2, 4, 0}},
    {72, {0, 2, 3, 1}},    {84, {0, 1, 5, 0}},    {9, {0, 1, 4, 1}},     {2, {0, 0, 6, 0}},
};

constexpr Term kC23[] = {
    {966, {6, 0, 0, 0}},    {6848, {5, 1, 0, 0}},   {8040, {5, 0, 1, 0}},   {1584, {5, 0, 0, 1}},
    {19150, {4, 2, 0, 0}},  {43004, {4, 1, 1, 0}},  {7746, {4, 1, 0, 1}},   {23198, {4, 0, 2, 0}},
    {7617, {4, 0, 1, 1}},   {513, {4, 0, 0, 2}},    {27096, {3, 3, 0, 0}},  {87117, {3, 2, 1, 0}},
    {14345, {3, 2, 0, 1}},  {89220, {3, 1, 2, 0}},  {26528, {3, 1, 1, 1}},  {1602, {3, 1, 0, 2}},
    {28820, {3, 0, 3, 0}},  {11336, {3, 0, 2, 1}},  {1152, {3, 0, 1, 2}},   {27, {3, 0, 0, 3}},
    {20540, {2, 4, 0, 0}},  {84010, {2, 3, 1, 0}},  {12692, {2, 3, 0, 1}},  {122577, {2, 2, 2, 0}},
    {33260, {2, 2, 1, 1}},  {1830, {2, 2, 0, 2}},   {74852, {2, 1, 3, 0}},  {26816, {2, 1, 2, 1}},
    {2514, {2, 1, 1, 2}},   {54, {2, 1, 0, 3}},     {15926, {2, 0, 4, 0}},  {6558, {2, 0, 3, 1}},
    {786, {2, 0, 2, 2}},    {27, {2, 0, 1, 3}},     {7950, {1, 5, 0, 0}},   {38827, {1, 4, 1, 0}},
    {5412, {1, 4, 0, 1}},   {71948, {1, 3, 2, 0}},  {17980, {1, 3, 1, 1}},  {912, {1, 3, 0, 2}},
    {62663, {1, 2, 3, 0}},  {20741, {1, 2, 2, 1}},  {1812, {1, 2, 1, 2}},   {36, {1, 2, 0, 3}},
    {25404, {1, 1, 4, 0}},  {9800, {1, 1, 3, 1}},   {1110, {1, 1, 2, 2}},   {36, {1, 1, 1, 3}},
    {3812, {1, 0, 5, 0}},   {1624, {1, 0, 4, 1}},   {216, {1, 0, 3, 2}},    {9, {1, 0, 2, 3}},
    {1234, {0, 6, 0, 0}},   {6924, {0, 5, 1, 0}},   {896, {0, 5, 0, 1}},    {15333, {0, 4, 2, 0}},
    {3560, {0, 4, 1, 1}},   {168, {0, 4, 0, 2}},    {17026, {0, 3, 3, 0}},  {5264, {0, 3, 2, 1}},
    {432, {0, 3, 1, 2}},    {8, {0, 3, 0, 3}},      {9933, {0, 2, 4, 0}},   {3622, {0, 2, 3, 1}},
    {390, {0, 2, 2, 2}},    {12, {0, 2, 1, 3}},     {2880, {0, 1, 5, 0}},   {1174, {0, 1, 4, 1}},
    {150, {0, 1, 3, 2}},    {6, {0, 1, 2, 3}},      {326, {0, 0, 6, 0}},    {145, {0, 0, 5, 1}},
    {21, {0, 0, 4, 2}},     {1, {0, 0, 3, 3}},
};

constexpr Term kD23[] = {
    {7458, {6, 0, 0, 0}},    {60264, {5, 1, 0, 0}},   {75780, {5, 0, 1, 0}},   {17820, {5, 0, 0, 1}},
    {195930, {4, 2, 0, 0}},  {482400, {4, 1, 1, 0}},  {108972, {4, 1, 0, 1}},  {292950, {4, 0, 2, 0}},
    {128844, {4, 0, 1, 1}},  {13446, {4, 0, 0, 2}},   {328224, {3, 3, 0, 0}},  {1185624, {3, 2, 1, 0}},
    {257292, {3, 2, 0, 1}},  {1406448, {3, 1, 2, 0}}, {593280, {3, 1, 1, 1}},  {59400, {3, 1, 0, 2}},
    {547032, {3, 0, 3, 0}},  {335592, {3, 0, 2, 1}},  {65016, {3, 0, 1, 2}},   {3996, {3, 0, 0, 3}},
    {299250, {2, 4, 0, 0}},  {1409328, {2, 3, 1, 0}}, {294264, {2, 3, 0, 1}},  {2449548, {2, 2, 2, 0}},
    {993708, {2, 2, 1, 1}},  {95940, {2, 2, 0, 2}},   {1859616, {2, 1, 3, 0}}, {1097496, {2, 1, 2, 1}},
    {205560, {2, 1, 1, 2}},  {12312, {2, 1, 0, 3}},   {519534, {2, 0, 4, 0}},  {396072, {2, 0, 3, 1}},
    {108036, {2, 0, 2, 2}},  {12636, {2, 0, 1, 3}},   {540, {2, 0, 0, 4}},     {141120, {1, 5, 0, 0}},
    {812700, {1, 4, 1, 0}},  {163728, {1, 4, 0, 1}},  {1841472, {1, 3, 2, 0}}, {721296, {1, 3, 1, 1}},
    {67536, {1, 3, 0, 2}},   {2049912, {1, 2, 3, 0}}, {1170180, {1, 2, 2, 1}}, {213336, {1, 2, 1, 2}},
    {12528, {1, 2, 0, 3}},   {1120104, {1, 1, 4, 0}}, {828576, {1, 1, 3, 1}},  {221112, {1, 1, 2, 2}},
    {25488, {1, 1, 1, 3}},   {1080, {1, 1, 0, 4}},    {240228, {1, 0, 5, 0}},  {216252, {1, 0, 4, 1}},
    {75384, {1, 0, 3, 2}},   {12852, {1, 0, 2, 3}},   {1080, {1, 0, 1, 4}},    {36, {1, 0, 0, 5}},
    {26974, {0, 6, 0, 0}},   {182568, {0, 5, 1, 0}},  {35616, {0, 5, 0, 1}},   {506490, {0, 4, 2, 0}},
    {192432, {0, 4, 1, 1}},  {17568, {0, 4, 0, 2}},   {736816, {0, 3, 3, 0}},  {409080, {0, 3, 2, 1}},
    {73008, {0, 3, 1, 2}},   {4224, {0, 3, 0, 3}},    {592746, {0, 2, 4, 0}},  {428100, {0, 2, 3, 1}},
    {112356, {0, 2, 2, 2}},  {12816, {0, 2, 1, 3}},   {540, {0, 2, 0, 4}},     {250176, {0, 1, 5, 0}},
    {220956, {0, 1, 4, 1}},  {76104, {0, 1, 3, 2}},   {12888, {0, 1, 2, 3}},   {1080, {0, 1, 1, 4}},
    {36, {0, 1, 0, 5}},      {43354, {0, 0, 6, 0}},   {45132, {0, 0, 5, 1}},   {19206, {0, 0, 4, 2}},
    {4308, {0, 0, 3, 3}},    {540, {0, 0, 2, 4}},     {36, {0, 0, 1, 5}},      {1, {0, 0, 0, 6}},
};

// Cubic cofactor multiplying 2 s^3 in the (2,3) total-count closed form.
constexpr Term kReject23[] = {
    {501, {3, 0, 0, 0}},  {1638, {2, 1, 0, 0}}, {1773, {2, 0, 1, 0}}, {297, {2, 0, 0, 1}},
    {1755, {1, 2, 0, 0}}, {3744, {1, 1, 1, 0}}, {621, {1, 1, 0, 1}},  {1971, {1, 0, 2, 0}},
    {648, {1, 0, 1, 1}},  {54, {1, 0, 0, 2}},   {614, {0, 3, 0, 0}},  {1929, {0, 2, 1, 0}},
    {318, {0, 2, 0, 1}},  {1986, {0, 1, 2, 0}}, {651, {0, 1, 1, 1}},  {54, {0, 1, 0, 2}},
    {667, {0, 0, 3, 0}},  {327, {0, 0, 2, 1}},  {54, {0, 0, 1, 2}},   {3, {0, 0, 0, 3}},
};

template <std::size_t N>
Polynomial poly(const Term (&t)[N]) {
    return from_terms(t, N);
}

}  // namespace

bool has_builtin_system(int d, int b) { return d == 2 && (b == 2 || b == 3); }

RecursionSystem builtin_system(int d, int b) {
    if (!has_builtin_system(d, b))
        throw std::invalid_argument("builtin_system: only (2,2) and (2,3) are built in");
    RecursionSystem sys;
    sys.d = d;
    sys.b = b;
    sys.pieces = b * (b + 1) / 2;
    sys.classes = orbit_classes(3, true);
    if (b == 2)
        sys.polys = {poly(kA22), poly(kB22), poly(kC22), poly(kD22)};
    else
        sys.polys = {poly(kA23), poly(kB23), poly(kC23), poly(kD23)};
    sys.check();
    return sys;
}

Polynomial f_rejection_cofactor(int d, int b, int nclasses) {
    if (d != 2 || (b != 2 && b != 3))
        throw std::invalid_argument("f_rejection_cofactor: unknown closed form");
    if (nclasses != 4) throw std::invalid_argument("f_rejection_cofactor: need 4 classes");
    if (b == 2) return Polynomial::constant(4, 1);
    return poly(kReject23);
}

}  // namespace sgao
