// Shared numerical kernels: 2x2 complex matrices, adaptive Runge-Kutta,
// Newton iteration for holomorphic functions, quadrature nodes, small
// linear solves and a bounded parallel map.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sinhg {

using Cplx = std::complex<double>;
inline constexpr double PI = 3.141592653589793238462643383279502884;
inline const Cplx I_UNIT{0.0, 1.0};

/// Thrown when an iteration or quadrature fails to converge; carries context.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// 2x2 complex matrices (row major: [[a,b],[c,d]])

struct Mat2 {
    Cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(Cplx s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    Cplx det() const { return a * d - b * c; }
    Cplx trace() const { return a + d; }
    Mat2 inverse() const {
        Cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }

    /// max-entry norm
    double norm() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
    double frob() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
};

inline Mat2 operator*(Cplx s, const Mat2& m) { return m * s; }
inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

// ---------------------------------------------------------------------------
// Embedded Runge-Kutta (Dormand-Prince 5(4)) on an arbitrary linear state.
// State must support s+s, s*double, and a norm() -> double.

template <class State>
struct OdeResult {
    State y;
    int steps = 0;
};

template <class State, class Rhs>
OdeResult<State> ode45(const Rhs& rhs, State y0, double t0, double t1, double tol,
                       const std::function<void(double, const State&)>& observer = nullptr) {
    // Dormand-Prince coefficients
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double span = std::abs(t1 - t0);
    if (span == 0.0) return {y0, 0};
    double t = t0;
    State y = y0;
    State k1 = rhs(t, y);
    double h = dir * std::min(0.05 * span, span);
    int steps = 0;
    const int max_steps = 2000000;
    if (observer) observer(t, y);
    while (dir * (t1 - t) > 0) {
        if (dir * (t + h - t1) > 0) h = t1 - t;
        State k2 = rhs(t + c2 * h, y + k1 * (a21 * h));
        State k3 = rhs(t + c3 * h, y + k1 * (a31 * h) + k2 * (a32 * h));
        State k4 = rhs(t + c4 * h, y + k1 * (a41 * h) + k2 * (a42 * h) + k3 * (a43 * h));
        State k5 = rhs(t + c5 * h,
                       y + k1 * (a51 * h) + k2 * (a52 * h) + k3 * (a53 * h) + k4 * (a54 * h));
        State k6 = rhs(t + h, y + k1 * (a61 * h) + k2 * (a62 * h) + k3 * (a63 * h) +
                                  k4 * (a64 * h) + k5 * (a65 * h));
        State y5 = y + k1 * (b1 * h) + k3 * (b3 * h) + k4 * (b4 * h) + k5 * (b5 * h) +
                   k6 * (b6 * h);
        State k7 = rhs(t + h, y5);
        State errv = k1 * (e1 * h) + k3 * (e3 * h) + k4 * (e4 * h) + k5 * (e5 * h) +
                     k6 * (e6 * h) + k7 * (e7 * h);
        double err = errv.norm();
        double scale = std::max(1.0, std::max(y.norm(), y5.norm()));
        if (err <= tol * scale) {
            t += h;
            y = y5;
            k1 = k7;  // FSAL
            if (observer) observer(t, y);
        }
        double fac = (err > 0) ? 0.9 * std::pow(tol * scale / err, 0.2) : 5.0;
        fac = std::min(5.0, std::max(0.2, fac));
        h *= fac;
        if (std::abs(h) < 1e-15 * span)
            throw NumericError("ode45: step size underflow at t=" + std::to_string(t));
        if (++steps > max_steps) throw NumericError("ode45: too many steps");
    }
    return {y, steps};
}

// State wrapper for vector-valued ODEs.
struct CVec {
    std::vector<Cplx> v;
    CVec operator+(const CVec& o) const {
        CVec r = *this;
        for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
        return r;
    }
    CVec operator*(double s) const {
        CVec r = *this;
        for (auto& x : r.v) x *= s;
        return r;
    }
    double norm() const {
        double m = 0;
        for (const auto& x : v) m = std::max(m, std::abs(x));
        return m;
    }
};

// ---------------------------------------------------------------------------
// Newton iteration for a holomorphic function with numerical derivative.

struct NewtonOptions {
    double tol = 1e-12;        // relative step tolerance
    int max_iter = 60;
    double deriv_step = 1e-6;  // relative finite-difference step
};

/// Newton's method on a holomorphic f; derivative by central differences.
/// Returns the root; throws NumericError when the iteration stalls.
template <class F>
Cplx newton(const F& f, Cplx z0, const NewtonOptions& opt = {}) {
    Cplx z = z0;
    for (int it = 0; it < opt.max_iter; ++it) {
        double h = opt.deriv_step * (std::abs(z) + 1.0);
        Cplx fp = (f(z + h) - f(z - h)) / (2.0 * h);
        if (fp == Cplx(0.0)) throw NumericError("newton: vanishing derivative");
        Cplx step = f(z) / fp;
        z -= step;
        if (std::abs(step) <= opt.tol * (std::abs(z) + 1.0)) return z;
    }
    throw NumericError("newton: no convergence from seed (" + std::to_string(z0.real()) + "," +
                       std::to_string(z0.imag()) + ")");
}

// ---------------------------------------------------------------------------
// Quadrature

/// Gauss-Legendre nodes/weights on [0,1].
struct Quadrature {
    std::vector<double> x, w;
};

inline Quadrature gauss_legendre01(int n) {
    Quadrature q;
    q.x.resize(n);
    q.w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n with asymptotic seed
        double t = std::cos(PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        q.x[i] = 0.5 * (1.0 - t);  // map [-1,1] -> [0,1], ascending
        q.w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Dense complex linear solve (Gaussian elimination, partial pivoting);
// for the small normalization systems (dim <= ~16).

inline std::vector<Cplx> solve_linear(std::vector<std::vector<Cplx>> A, std::vector<Cplx> rhs) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-300)
            throw NumericError("solve_linear: singular normalization system");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = col + 1; r < n; ++r) {
            Cplx f = A[r][col] / A[col][col];
            for (size_t cc = col; cc < n; ++cc) A[r][cc] -= f * A[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Cplx> x(n);
    for (size_t i = n; i-- > 0;) {
        Cplx s = rhs[i];
        for (size_t j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Parallel map over an index range; thread count capped by
// SINH_SPECTRAL_THREADS. Results must be written by index (deterministic).

inline int thread_cap() {
    if (const char* env = std::getenv("SINH_SPECTRAL_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

template <class Fn>
void parallel_for(int n, const Fn& fn) {
    int nt = std::min(thread_cap(), n);
    if (nt <= 1 || n < 4) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr eptr;
    std::mutex mx;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < n; i += nt) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mx);
                if (!eptr) eptr = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (eptr) std::rethrow_exception(eptr);
}

}  // namespace sinhg
