#include "dmqc/discord_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "dmqc/correlations.hpp"

namespace dmqc {

namespace {

using std::numbers::pi;

double entropy_2x2(cplx m00, cplx m01, cplx m11, double p) {
    const double gap = std::hypot((m00 - m11).real(), 2.0 * std::abs(m01)) / p;
    return binary_entropy(0.5 * (1.0 + std::min(gap, 1.0)));
}

struct Point {
    double value;
    double theta;
    double phi;
};

Point nelder_mead(const CMatrix& rho, double theta, double phi, double step, double tol) {
    std::array<Point, 3> s{Point{0.0, theta, phi}, Point{0.0, theta + step, phi}, Point{0.0, theta, phi + step}};
    const auto eval = [&](Point& p) { p.value = measured_conditional_entropy(rho, p.theta, p.phi); };
    for (Point& p : s) {
        eval(p);
    }
    const auto by_value = [](const Point& a, const Point& b) { return a.value < b.value; };

    for (int iter = 0; iter < 5000; ++iter) {
        std::sort(s.begin(), s.end(), by_value);
        const double spread = s[2].value - s[0].value;
        const double size = std::max(std::hypot(s[1].theta - s[0].theta, s[1].phi - s[0].phi),
                                     std::hypot(s[2].theta - s[0].theta, s[2].phi - s[0].phi));
        if (spread < tol && size < 1e-9) {
            break;
        }
        const double ct = 0.5 * (s[0].theta + s[1].theta);
        const double cp = 0.5 * (s[0].phi + s[1].phi);
        const auto along = [&](double k) {
            Point p{0.0, ct + k * (s[2].theta - ct), cp + k * (s[2].phi - cp)};
            eval(p);
            return p;
        };

        const Point reflected = along(-1.0);
        if (reflected.value < s[0].value) {
            const Point expanded = along(-2.0);
            s[2] = expanded.value < reflected.value ? expanded : reflected;
        } else if (reflected.value < s[1].value) {
            s[2] = reflected;
        } else {
            const Point contracted = reflected.value < s[2].value ? along(-0.5) : along(0.5);
            if (contracted.value < std::min(reflected.value, s[2].value)) {
                s[2] = contracted;
            } else {
                for (int k = 1; k < 3; ++k) {
                    s[k].theta = 0.5 * (s[0].theta + s[k].theta);
                    s[k].phi = 0.5 * (s[0].phi + s[k].phi);
                    eval(s[k]);
                }
            }
        }
    }
    return *std::min_element(s.begin(), s.end(), by_value);
}

OracleResult finish(const CMatrix& rho, const std::vector<double>& grid, const DiscordOracleOptions& opts) {
    const int nt = opts.theta_steps + 1;
    const int np = opts.phi_steps;
    const double dt = pi / opts.theta_steps;
    const double dp = 2.0 * pi / opts.phi_steps;
    const auto at = [&](int i, int j) { return grid[i * np + ((j % np) + np) % np]; };

    // Local minima of the grid (phi periodic), best first, spaced apart.
    std::vector<std::pair<double, int>> minima;
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < np; ++j) {
            if ((i == 0 || i == nt - 1) && j != 0) {
                continue;  // poles: phi is degenerate
            }
            const double v = at(i, j);
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di) {
                const int ii = i + di;
                if (ii < 0 || ii >= nt) {
                    continue;
                }
                for (int dj = -1; dj <= 1; ++dj) {
                    if ((di != 0 || dj != 0) && at(ii, j + dj) < v) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (is_min) {
                minima.emplace_back(v, i * np + j);
            }
        }
    }
    std::sort(minima.begin(), minima.end());

    std::vector<int> starts;
    for (const auto& [v, idx] : minima) {
        if (static_cast<int>(starts.size()) >= opts.refine_starts) {
            break;
        }
        const int i = idx / np;
        const int j = idx % np;
        // n and -n define the same measurement, so the antipode counts as near
        const auto close = [&](int si, int sj) {
            const int dj = std::min(std::abs(sj - j), np - std::abs(sj - j));
            return std::abs(si - i) <= 5 && dj <= 5;
        };
        const bool near_existing = std::any_of(starts.begin(), starts.end(), [&](int s) {
            const int si = s / np;
            const int sj = s % np;
            return close(si, sj) || close(nt - 1 - si, (sj + np / 2) % np);
        });
        if (!near_existing) {
            starts.push_back(idx);
        }
    }

    Point best{minima.front().first, (minima.front().second / np) * dt, (minima.front().second % np) * dp};
    for (int idx : starts) {
        const Point p = nelder_mead(rho, (idx / np) * dt, (idx % np) * dp, 0.5 * dt, opts.tolerance);
        if (p.value < best.value) {
            best = p;
        }
    }

    OracleResult r;
    r.min_conditional_entropy = best.value;
    r.theta = best.theta;
    r.phi = best.phi;
    r.discord = vn_entropy(reduce_to_second(rho)) - vn_entropy(rho) + best.value;
    r.classical = vn_entropy(reduce_to_first(rho)) - best.value;
    return r;
}

void check_inputs(const CMatrix& rho, const DiscordOracleOptions& opts) {
    if (rho.dim() != 4) {
        throw DimensionError("discord_oracle: expected a 4x4 matrix");
    }
    if (opts.theta_steps < 2 || opts.phi_steps < 3 || opts.refine_starts < 1) {
        throw DomainError("discord_oracle: grid too coarse");
    }
}

}  // namespace

double measured_conditional_entropy(const CMatrix& rho, double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);

    double h = 0.0;
    for (double sign : {1.0, -1.0}) {
        // projector (I + sign n.sigma)/2 on qubit B
        const cplx proj[2][2] = {{0.5 * (1.0 + sign * nz), 0.5 * sign * cplx(nx, -ny)},
                                 {0.5 * sign * cplx(nx, ny), 0.5 * (1.0 - sign * nz)}};
        cplx m[2][2] = {};
        for (int a = 0; a < 2; ++a) {
            for (int ap = 0; ap < 2; ++ap) {
                for (int b = 0; b < 2; ++b) {
                    for (int bp = 0; bp < 2; ++bp) {
                        m[a][ap] += proj[b][bp] * rho(2 * a + bp, 2 * ap + b);
                    }
                }
            }
        }
        const double p = (m[0][0] + m[1][1]).real();
        if (p > 1e-15) {
            h += p * entropy_2x2(m[0][0], m[0][1], m[1][1], p);
        }
    }
    return h;
}

OracleResult discord_oracle(const CMatrix& rho, const DiscordOracleOptions& opts) {
    check_inputs(rho, opts);
    const int nt = opts.theta_steps + 1;
    const int np = opts.phi_steps;
    const double dt = pi / opts.theta_steps;
    const double dp = 2.0 * pi / opts.phi_steps;
    std::vector<double> grid(static_cast<std::size_t>(nt) * np);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < np; ++j) {
            grid[i * np + j] = measured_conditional_entropy(rho, i * dt, j * dp);
        }
    }
    return finish(rho, grid, opts);
}

OracleResult discord_oracle_serial(const CMatrix& rho, const DiscordOracleOptions& opts) {
    check_inputs(rho, opts);
    const int nt = opts.theta_steps + 1;
    const int np = opts.phi_steps;
    const double dt = pi / opts.theta_steps;
    const double dp = 2.0 * pi / opts.phi_steps;
    std::vector<double> grid(static_cast<std::size_t>(nt) * np);
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < np; ++j) {
            grid[i * np + j] = measured_conditional_entropy(rho, i * dt, j * dp);
        }
    }
    return finish(rho, grid, opts);
}

}  // namespace dmqc
