#include "hexlat/variety_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <functional>

namespace hexlat {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double bisect(double lo, double hi, double flo, const std::function<double(double)>& f,
              double tol) {
    // assumes a sign change in [lo, hi]
    for (int it = 0; it < 200 && hi - lo > tol * 1e-4; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// nu and omega of the triangle with sides 1, r, r^t; branch +1 puts nu in
// [pi/2, pi], branch -1 mirrors it into [pi, 3pi/2]
void law_of_cosines(double r, double t, int branch, double& nu, double& omega) {
    double rt = std::pow(r, t);
    double c = (r * r - rt * rt - 1.0) / (2.0 * rt);
    c = std::clamp(c, -1.0, 1.0);
    double base = std::acos(c);
    nu = branch > 0 ? base : kTau - base;
    std::complex<double> rhs =
        -1.0 - rt * std::complex<double>(std::cos(nu), std::sin(nu));
    omega = std::arg(rhs);
    if (omega < 0) omega += kTau;
}

double wrap_dist(double a, double b, double period) {
    double d = std::fmod(std::abs(a - b), period);
    return std::min(d, period - d);
}

} // namespace

TraceResult arc_solution(double t, const ToleranceConfig& cfg) {
    if (t < 1.0) throw ConvergenceError("arc_solution needs t >= 1");
    TraceResult out;
    auto f = [&](double r) { return std::pow(r, t) + r - 1.0; };
    if (f(0.0) >= 0 || f(1.0) <= 0) throw ConvergenceError("no bracket for r0");
    out.r0 = bisect(0.0, 1.0, f(0.0), f, cfg.root_tol);
    if (std::abs(f(out.r0)) > 1e3 * cfg.root_tol)
        throw ConvergenceError("bisection for r0 did not converge");

    int n = std::max(cfg.samples, 8);
    for (int i = 0; i <= n; ++i) {
        double s = double(i) / n;
        double r;
        int branch;
        if (s <= 0.5) { r = (2 * out.r0 - 2) * s + 1; branch = +1; }
        else { r = (2 - 2 * out.r0) * s + 2 * out.r0 - 1; branch = -1; }
        TraceSample ts;
        ts.r = r;
        law_of_cosines(r, t, branch, ts.nu, ts.omega);
        ts.z1 = std::polar(r, ts.nu);
        ts.z2 = std::polar(1.0, ts.omega);
        double res = std::abs(std::polar(std::pow(r, t), ts.nu) +
                              std::polar(r, ts.omega) + 1.0);
        out.max_residual = std::max(out.max_residual, res);
        out.samples.push_back(ts);
    }

    std::complex<double> e1 = std::polar(1.0, kTau / 3.0);
    std::complex<double> e2 = std::polar(1.0, 2.0 * kTau / 3.0);
    double dev0 = std::abs(out.samples.front().z1 - e1) +
                  std::abs(out.samples.front().z2 - e2);
    double dev1 = std::abs(out.samples.back().z1 - e2) +
                  std::abs(out.samples.back().z2 - e1);
    // junction at s = 1/2 must be (-r0, -1)
    const TraceSample& mid = out.samples[n / 2];
    double devm = std::abs(mid.z1 - std::complex<double>(-out.r0, 0.0)) +
                  std::abs(mid.z2 - std::complex<double>(-1.0, 0.0));
    out.endpoint_deviation = std::max({dev0, dev1, devm});

    for (size_t i = 0; i + 2 < out.samples.size(); ++i)
        for (size_t j = i + 2; j < out.samples.size(); ++j) {
            double dist = std::abs(out.samples[i].z1 - out.samples[j].z1) +
                          std::abs(out.samples[i].z2 - out.samples[j].z2);
            if (dist < 1e-9) ++out.injectivity_violations;
        }
    return out;
}

std::pair<double, double> rd_slice(std::int64_t d, double s0, const ToleranceConfig& cfg) {
    if (d < 2 || s0 <= 0 || s0 > 1) throw ConvergenceError("rd_slice needs d >= 2, s0 in (0,1]");
    double sd = std::pow(s0, double(d - 1));
    auto f = [&](double r) { return std::pow(r, double(d - 1)) + r * sd - s0; };
    auto g = [&](double r) { return std::pow(r, double(d - 1)) - r * sd - s0; };
    double r0 = bisect(0.0, 1.0, f(0.0), f, cfg.root_tol);
    double r1;
    if (g(1.0) <= 0) r1 = 1.0;
    else r1 = bisect(0.0, 1.0, g(0.0), g, cfg.root_tol);
    if (!(r0 < r1)) throw ConvergenceError("degenerate R_d slice");
    return {r0, r1};
}

namespace {

// Newton for the two-real-equation system h(theta, psi) = 0 on the torus.
bool newton_sigma(std::int64_t d, double& th, double& ps, double tol) {
    for (int it = 0; it < 60; ++it) {
        std::complex<double> i1 = std::polar(1.0, th + (d - 1) * ps);
        std::complex<double> i2 = std::polar(1.0, ps);
        std::complex<double> i3 = std::polar(1.0, (d - 1) * th);
        std::complex<double> h = i1 + i2 + i3;
        if (std::abs(h) < tol) return true;
        // dh/dth = i(i1 + (d-1) i3), dh/dps = i((d-1) i1 + i2)
        std::complex<double> hth = std::complex<double>(0, 1) * (i1 + double(d - 1) * i3);
        std::complex<double> hps =
            std::complex<double>(0, 1) * (double(d - 1) * i1 + i2);
        // solve [Re hth Re hps; Im hth Im hps] * delta = -h
        double a = hth.real(), b = hps.real(), c = hth.imag(), e = hps.imag();
        double det = a * e - b * c;
        if (std::abs(det) < 1e-14) return false;
        double dx = (-h.real() * e + h.imag() * b) / det;
        double dy = (-a * h.imag() + c * h.real()) / det;
        double lim = 0.5;
        dx = std::clamp(dx, -lim, lim);
        dy = std::clamp(dy, -lim, lim);
        th += dx;
        ps += dy;
    }
    return false;
}

} // namespace

std::vector<std::pair<double, double>> sigma_points(std::int64_t d,
                                                    const ToleranceConfig& cfg) {
    if (d < 1) throw ConvergenceError("sigma_points needs d >= 1");
    std::int64_t D = d * d - 3 * d + 3;
    std::vector<std::pair<double, double>> roots;
    int grid = std::max<int>(8, int(6 * D));
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double th = kTau * (i + 0.37) / grid;
            double ps = kTau * (j + 0.61) / grid;
            if (!newton_sigma(d, th, ps, cfg.root_tol)) continue;
            th = std::fmod(std::fmod(th, kTau) + kTau, kTau);
            ps = std::fmod(std::fmod(ps, kTau) + kTau, kTau);
            bool fresh = true;
            for (auto& [a, b] : roots)
                if (wrap_dist(a, th, kTau) + wrap_dist(b, ps, kTau) < 10 * cfg.match_tol)
                    fresh = false;
            if (fresh) roots.push_back({th, ps});
        }
    }
    if ((std::int64_t)roots.size() != 2 * D)
        throw MismatchError("sigma point count " + std::to_string(roots.size()) +
                            " != " + std::to_string(2 * D));

    // bijection against the exact bridge points
    auto [minus, plus] = variety_bridge_points(d);
    std::vector<Vec2> exact = minus;
    exact.insert(exact.end(), plus.begin(), plus.end());
    std::vector<int> used(roots.size(), 0);
    for (const Vec2& e : exact) {
        double th = e.x.to_double() * kTau, ps = e.y.to_double() * kTau;
        bool hit = false;
        for (size_t k = 0; k < roots.size(); ++k) {
            if (used[k]) continue;
            if (wrap_dist(roots[k].first, th, kTau) < cfg.match_tol &&
                wrap_dist(roots[k].second, ps, kTau) < cfg.match_tol) {
                used[k] = 1;
                hit = true;
                break;
            }
        }
        if (!hit)
            throw MismatchError("exact bridge point (" + e.x.str() + "," + e.y.str() +
                                ") has no numeric partner");
    }
    // report in turns
    std::vector<std::pair<double, double>> turns;
    for (auto& [a, b] : roots) turns.push_back({a / kTau, b / kTau});
    return turns;
}

std::vector<TraceResult> trace_h1_arcs(std::int64_t d, const ToleranceConfig& cfg) {
    if (d < 2) throw ConvergenceError("trace_h1_arcs needs d >= 2");
    std::int64_t D = d * d - 3 * d + 3;
    TraceResult base = arc_solution(double(d - 1), cfg);
    std::vector<TraceResult> out;
    for (std::int64_t j = 1; j <= D; ++j) {
        TraceResult tr = base;
        for (TraceSample& s : tr.samples) {
            s.theta = ((d - 2) * s.nu + s.omega + kTau * j) / double(D);
            s.psi = (d - 1) * s.theta - s.nu;
            s.z1 = std::polar(s.r, s.theta);
            s.z2 = std::polar(1.0, s.psi);
            double res = std::abs(s.z1 * std::pow(s.z2, double(d - 1)) + s.z2 +
                                  std::pow(s.z1, double(d - 1)));
            tr.max_residual = std::max(tr.max_residual, res);
        }
        // endpoints against the exact arc endpoints (note the trace runs from
        // the plus endpoint to the minus endpoint)
        auto [mtail, phead] = variety_arc_endpoints(d, j);
        auto dev = [&](const TraceSample& s, const Vec2& e) {
            return wrap_dist(s.theta, e.x.to_double() * kTau, kTau) +
                   wrap_dist(s.psi, e.y.to_double() * kTau, kTau);
        };
        tr.endpoint_deviation =
            std::max(dev(tr.samples.front(), phead), dev(tr.samples.back(), mtail));
        if (tr.endpoint_deviation > cfg.match_tol)
            throw MismatchError("trace endpoints do not match the exact arc " +
                                std::to_string(j));
        out.push_back(std::move(tr));
    }
    // sampled separation between distinct traces in the solid torus
    double min_sep = 1e9;
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a + 1; b < out.size(); ++b)
            for (size_t i = 0; i < out[a].samples.size(); i += 7)
                for (size_t k = 0; k < out[b].samples.size(); k += 7) {
                    double dist = std::abs(out[a].samples[i].z1 - out[b].samples[k].z1) +
                                  std::abs(out[a].samples[i].z2 - out[b].samples[k].z2);
                    min_sep = std::min(min_sep, dist);
                }
    if (out.size() > 1 && min_sep < cfg.separation_floor)
        throw SeparationError("traces approach within " + std::to_string(min_sep));
    return out;
}

SmoothnessReport smoothness_check(std::int64_t d, std::int64_t n_samples,
                                  const ToleranceConfig& cfg) {
    if (d < 2) throw ConvergenceError("smoothness_check needs d >= 2");
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    SmoothnessReport rep;
    rep.min_gradient = 1e9;
    rep.min_critical_residual = 1e9;
    auto f = [&](std::complex<double> z1, std::complex<double> z2) {
        return z1 * std::pow(z2, double(d - 1)) + z2 + std::pow(z1, double(d - 1));
    };
    for (std::int64_t it = 0; it < n_samples; ++it) {
        std::complex<double> z1 = std::polar(std::sqrt(uni(rng)), kTau * uni(rng));
        std::complex<double> z2 = std::polar(std::sqrt(uni(rng)), kTau * uni(rng));
        // Newton in z2 onto the zero set, damped
        bool ok = false;
        for (int k = 0; k < 80; ++k) {
            std::complex<double> val = f(z1, z2);
            if (std::abs(val) < cfg.root_tol) { ok = true; break; }
            std::complex<double> der =
                z1 * double(d - 1) * std::pow(z2, double(d - 2)) + 1.0;
            if (std::abs(der) < 1e-12) break;
            std::complex<double> step = val / der;
            if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
            z2 -= step;
        }
        if (!ok || std::abs(z2) > 1.0 || std::abs(z1) > 1.0) continue;
        ++rep.accepted;
        std::complex<double> d1 =
            std::pow(z2, double(d - 1)) + double(d - 1) * std::pow(z1, double(d - 2));
        std::complex<double> d2 = double(d - 1) * z1 * std::pow(z2, double(d - 2)) + 1.0;
        rep.min_gradient =
            std::min(rep.min_gradient, std::sqrt(std::norm(d1) + std::norm(d2)));
        rep.min_critical_residual =
            std::min(rep.min_critical_residual, std::max(std::abs(d1), std::abs(d2)));
    }
    if (rep.accepted < n_samples / 20)
        throw ConvergenceError("too few zero-set samples accepted");
    return rep;
}

RdCountReport count_rd_solutions(std::int64_t d, int grid, const ToleranceConfig&) {
    RdCountReport rep;
    rep.expected_per_point = 2 * (d * d - 3 * d + 3);
    std::int64_t D = d * d - 3 * d + 3;
    for (int i = 1; i < grid; ++i) {
        for (int k = 1; k < grid; ++k) {
            double r = double(i) / grid, s = double(k) / grid;
            double a = std::pow(r, double(d - 1)); // side r^{d-1}
            double b = r * std::pow(s, double(d - 1));
            // strict interior of R_d: s between a - b and a + b
            if (!(a - b < s - 1e-9 && s + 1e-9 < a + b)) continue;
            ++rep.grid_points;
            // triangle with sides s, a, b: angles via law of cosines
            double cosw = (a * a - s * s - b * b) / (2.0 * s * b);
            cosw = std::clamp(cosw, -1.0, 1.0);
            std::map<std::pair<long long, long long>, int> seen;
            int found = 0;
            for (int branch = 0; branch < 2; ++branch) {
                double w = branch == 0 ? kTau - std::acos(cosw) : std::acos(cosw);
                std::complex<double> rhs = -s - b * std::polar(1.0, w);
                double nu = std::arg(rhs / a);
                if (nu < 0) nu += kTau;
                for (std::int64_t j = 1; j <= D; ++j) {
                    double th = ((d - 2) * nu + w + kTau * j) / double(D);
                    double ps = (d - 1) * th - nu;
                    double res = std::abs(r * std::pow(s, double(d - 1)) *
                                              std::polar(1.0, th + (d - 1) * ps) +
                                          s * std::polar(1.0, ps) +
                                          std::pow(r, double(d - 1)) *
                                              std::polar(1.0, (d - 1) * th));
                    if (res > 1e-8) continue;
                    auto key = std::make_pair(
                        (long long)std::llround(std::fmod(std::fmod(th, kTau) + kTau, kTau) * 1e7),
                        (long long)std::llround(std::fmod(std::fmod(ps, kTau) + kTau, kTau) * 1e7));
                    if (seen.emplace(key, 1).second) ++found;
                }
            }
            if (found != rep.expected_per_point) ++rep.bad_points;
        }
    }
    return rep;
}

} // namespace hexlat
