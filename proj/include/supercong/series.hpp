#pragma once

// High-precision evaluation of Ramanujan-type series for 1/pi and 1/pi^2,
// the quadratic 3F2 transformation, and the tau-duality between series at z
// and 1/z.

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/frac.hpp"
#include "supercong/oracle.hpp"

namespace supercong {

using Real = boost::multiprecision::mpfr_float;

/// MPFR default precision is process-wide; holding a scope serialises
/// evaluations and restores the previous precision on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    std::unique_lock<std::recursive_mutex> lock_;
    unsigned saved_;
};

struct Complex {
    Real re;
    Real im;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& z);

/// re + im * sqrt(disc), an element of Q or of Q(sqrt(disc)) for disc < 0.
struct QuadNumber {
    BigRational re;
    BigRational im;
    long disc = -1;
};

class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeriesTarget { None, EightOverPi2, OneOverPi2, Sqrt7OverPi };

std::string_view to_string(SeriesTarget t);

/// sum_n prod (a_i)_n / prod (b_j)_n * (a + b n + c n^2) * (+-1)^n z^n
struct SeriesSpec {
    std::string id;
    std::vector<Frac> num_params;
    std::vector<Frac> den_params;
    std::array<QuadNumber, 3> weight;  // a, b, c
    QuadNumber z;
    bool alternating = false;
    SeriesTarget target = SeriesTarget::None;
};

const std::vector<SeriesSpec>& series_catalogue();
const SeriesSpec& find_series(std::string_view id);

enum class SeriesMethod { Direct, Wynn };

struct SeriesValue {
    Complex value;
    Real error_bound;
    unsigned terms = 0;
    unsigned working_digits = 0;
    SeriesMethod method = SeriesMethod::Direct;
};

/// Sum to an estimated absolute error below 10^-digits. |z| < 1 sums directly
/// until the geometric tail bound drops below 10^-(digits+2); |z| = 1 applies
/// Wynn's epsilon algorithm to 200 (then 400) partial sums at digits+30
/// working precision. |z| > 1 is rejected.
SeriesValue eval_series(const SeriesSpec& spec, unsigned digits);

/// Limit value of a target at the given precision (real, as a Complex).
Complex target_value(SeriesTarget t, unsigned digits);

struct WynnResult {
    Complex estimate;
    Real error;
};

/// Epsilon-algorithm limit of a sequence of partial sums; error is the spread
/// between neighbouring even-column estimates at the chosen column.
WynnResult wynn_epsilon(const std::vector<Complex>& partial_sums);

/// Plain power-series sum of pFq(a; b; w) for real |w| < 1.
Real hypergeometric_pfq(const std::vector<Frac>& a, const std::vector<Frac>& b, const Real& w, unsigned digits);

struct QuadraticReport {
    double z = 0;
    Real lhs;
    Real rhs;
    Real difference;
    bool agree = false;
};

/// 3F2(1/2,1/2,1/2;1,1;z) = (1-z)^(-1/2) 3F2(1/4,1/2,3/4;1,1;-4z/(1-z)^2), -1 < z < 0.
QuadraticReport quadratic_transform_check(double z, double tolerance = 1e-12);

class SingularDuality : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters of a 1/pi^2 series normalised so that tau^2 = c^2/(1+z).
struct DualityPoint {
    double tau = 0;
    double k = 0;
    double z = 0;
    double a = 0;
    double b = 0;
    double c = 0;
};

bool normalized(const DualityPoint& pt, double tolerance = 1e-12);

/// Image under z -> 1/z. Both tau-k relations are re-checked on the output.
DualityPoint duality_map(const DualityPoint& src);

/// The same map in exact rationals, for points with rational tau^2 and
/// rational sqrt(z). tau ratio tau2/tau1 = (k2+1)/(k1+1) is rational too.
struct ExactDuality {
    BigRational k;
    BigRational tau_ratio;
    BigRational z;
    BigRational a;
    BigRational b;
    BigRational c;
};

ExactDuality duality_map_exact(const BigRational& tau_sq, const BigRational& k, const BigRational& sqrt_z,
                               const BigRational& a, const BigRational& b, const BigRational& c);

}  // namespace supercong
