#pragma once

// Reference values from tests/oracles/oracles.py (mpmath, 40-60 digits).

#include <complex>

namespace oracle {

using Cx = std::complex<double>;

struct ComplexCase {
  Cx z;
  Cx value;
};

inline constexpr double kEuler = 0.57721566490153286061;
inline constexpr double kLogSqrtPi = 0.57236494292470008707;

inline const ComplexCase kLogGamma[] = {
    {{1.0, -1.0}, {-0.65092319930185633889, 0.30164032046753319789}},
    {{-2.5, 0.3}, {-0.43208889261320192052, -9.0933454212897415073}},
    {{-10.5, 1.0}, {-17.552220583067308596, -32.157908860372946528}},
    {{3.0, 40.0}, {-52.689155060822636631, 111.4051324154599655}},
    {{0.1, -80.0}, {-126.49757732673800452, -269.93333307241872221}},
    {{60.0, -70.0}, {149.74031085853794816, -297.9721824668026071}},
    {{-0.5, -1e-3}, {1.2655076560916038149, 3.1415561634776819169}},
};

inline const ComplexCase kDigamma[] = {
    {{1.0, 0.0}, {-0.57721566490153286061, 0.0}},
    {{2.0, 0.0}, {0.42278433509846713939, 0.0}},
    {{0.5, 0.0}, {-1.9635100260214234794, 0.0}},
    {{3.0, 4.0}, {1.5503598173334109127, 1.0105022091860444529}},
    {{-2.5, 0.5}, {1.1165080219699073014, 2.7175825969005915157}},
};

inline const ComplexCase kBinetMu[] = {
    {{1.0, 0.0}, {0.08106146679532725822, 0.0}},
    {{10.0, 0.0}, {0.0083305634333628712565, 0.0}},
    {{5.0, 0.0}, {0.016644691189821192163, 0.0}},
    {{5.0, 50.0}, {0.00016502295186702464877, -0.0016501859402880565662}},
    {{0.1, 3.0}, {0.00093577360876490203577, -0.027852676275290518601}},
};

struct RealCase {
  double x;
  double value;
};

inline const RealCase kBesselK0[] = {
    {0.2, 1.7527038555281459066},
    {1.0, 0.42102443824070833334},
    {2.0, 0.11389387274953343565},
    {2.5, 0.062347553200366186029},
    {4.0, 0.01115967608585302427},
    {8.94427190999915878564, 5.3960439607966634051e-5},
    {20.0, 5.7412378153365242927e-10},
    {50.0, 3.4101677497894955139e-23},
};

struct DensityCase {
  double c;
  double t;
  double value;
};

inline const DensityCase kDensity[] = {
    {0.5, 0.5, 0.61418358130505373484},
    {1.5, 2.0, 0.10450579123997057448},
    {3.0, 8.0, 0.0042706195762551518936},
    {2.5, 1.0, 0.1912677399612357655},
    {0.75, 0.1, 0.67183296510797717715},
    {1.5, 1e-3, 2.7430238818812814688},
    {0.5, 8.0, 3.2026490345652624268e-14},
    {0.5, 1e-12, 0.10794314437895296197},
    {2.5, 1e-15, 143.42934552983448226},
};

inline constexpr double kGamma15Squared = 0.78539816339744830962;
inline constexpr double kInvGamma25 = 0.75225277806367504926;

}  // namespace oracle
