#include "rds/blind_optics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "rds/errors.hpp"

namespace rds {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Strips per slat face in the cell radiosity. The beam illuminates only
// part of the struck slat, so a single uniform surface misses the Monte
// Carlo result by up to ~0.04; a dozen strips brings it well under 0.02.
constexpr int kSlatStrips = 12;

double deg2rad(double d) { return d * kPi / 180.0; }

void check_angles(double slat_angle_deg, double profile_angle_deg) {
    if (slat_angle_deg < 0.0 || slat_angle_deg > 180.0)
        throw BadAngle("slat angle outside [0, 180]");
    if (profile_angle_deg < 0.0 || profile_angle_deg >= 90.0)
        throw BadAngle("profile angle outside [0, 90)");
}

struct P2 {
    double x, y;
};

double dist(P2 a, P2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Crossed-strings view factor between two mutually visible segments of a
// convex enclosure. The crossing string pair always has the larger total
// length, so the orientation-free form uses the absolute difference.
double seg_vf(P2 a1, P2 a2, P2 b1, P2 b2) {
    double len = dist(a1, a2);
    if (len <= 0.0) return 0.0;
    double uncrossed = dist(a1, b1) + dist(a2, b2);
    double crossed = dist(a1, b2) + dist(a2, b1);
    return std::max(0.0, std::abs(crossed - uncrossed)) / (2.0 * len);
}

// One slat cell: indoor aperture, outdoor aperture, and the two bounding
// slat faces subdivided into strips. Surface order: IN, OUT, BOT strips
// (upper face of the lower slat, front reflectance), TOP strips (lower
// face of the upper slat, back reflectance). The radiosity matrix depends
// only on geometry and slat angle, so it is LU-factored once; each query
// is a back-substitution.
class SlatCell {
  public:
    SlatCell(const SlatGeometry& geometry, double slat_angle_deg)
        : w_(geometry.width_mm),
          s_(geometry.separation_mm),
          rho_front_(geometry.reflectance_front),
          rho_back_(geometry.reflectance_back) {
        double psi = deg2rad(slat_angle_deg);
        P2 pivot_bot{0.0, 0.0};
        P2 tip_bot{w_ * std::sin(psi), -w_ * std::cos(psi)};
        P2 pivot_top{0.0, s_};
        P2 tip_top{tip_bot.x, s_ + tip_bot.y};

        const int n = kSlatStrips;
        std::vector<Segment> surfaces;
        surfaces.reserve(2 + 2 * n);
        surfaces.push_back({{0.0, 0.0}, {0.0, s_}});     // IN
        surfaces.push_back({tip_bot, tip_top});          // OUT
        auto lerp = [](P2 a, P2 b, double t) {
            return P2{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
        };
        for (int i = 0; i < n; ++i)
            surfaces.push_back({lerp(pivot_bot, tip_bot, double(i) / n),
                                lerp(pivot_bot, tip_bot, double(i + 1) / n)});
        for (int i = 0; i < n; ++i)
            surfaces.push_back({lerp(pivot_top, tip_top, double(i) / n),
                                lerp(pivot_top, tip_top, double(i + 1) / n)});

        const int m = static_cast<int>(surfaces.size());
        f_.assign(m * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j)
                    f_[i * m + j] = seg_vf(surfaces[i].a, surfaces[i].b,
                                           surfaces[j].a, surfaces[j].b);

        // Factor A = I - diag(rho) * F_strip_strip.
        const int k = 2 * n;
        lu_.assign(k * k, 0.0);
        perm_.resize(k);
        for (int i = 0; i < k; ++i) {
            double rho = i < n ? rho_front_ : rho_back_;
            for (int j = 0; j < k; ++j)
                lu_[i * k + j] =
                    (i == j ? 1.0 : 0.0) - rho * f_[(2 + i) * m + (2 + j)];
        }
        factor();
    }

    struct Exchange {
        double to_in = 0.0;    // escaped through the indoor aperture
        double to_out = 0.0;   // escaped through the outdoor aperture
        double absorbed = 0.0; // absorbed on the slats during the exchange
    };

    // Distributes diffuse emission from the slat strips (strip_emission,
    // total flux per strip) plus optional unit radiosity on one aperture,
    // and returns where the flux ends up. All fluxes per one slat period.
    Exchange exchange(const std::vector<double>& strip_emission,
                      double aperture_radiosity, int aperture_index) const {
        const int n = kSlatStrips;
        const int m = 2 + 2 * n;
        const double strip_area = w_ / n;

        std::vector<double> rhs(2 * n, 0.0);
        for (int i = 0; i < 2 * n; ++i) {
            double rho = i < n ? rho_front_ : rho_back_;
            rhs[i] =
                strip_emission.empty() ? 0.0 : strip_emission[i] / strip_area;
            if (aperture_index >= 0)
                rhs[i] +=
                    rho * f_[(2 + i) * m + aperture_index] * aperture_radiosity;
        }
        std::vector<double> j_strip = lu_solve(rhs);

        Exchange result;
        if (aperture_index >= 0) {
            // Direct aperture-to-aperture passage.
            int other = aperture_index == 0 ? 1 : 0;
            double direct =
                s_ * aperture_radiosity * f_[aperture_index * m + other];
            (other == 0 ? result.to_in : result.to_out) += direct;
        }
        for (int i = 0; i < 2 * n; ++i) {
            int si = 2 + i;
            double flux = strip_area * j_strip[i];
            result.to_in += flux * f_[si * m + 0];
            result.to_out += flux * f_[si * m + 1];
            double rho = i < n ? rho_front_ : rho_back_;
            double irradiation = 0.0;
            if (aperture_index >= 0)
                irradiation += f_[si * m + aperture_index] * aperture_radiosity;
            for (int j = 0; j < 2 * n; ++j)
                irradiation += f_[si * m + (2 + j)] * j_strip[j];
            result.absorbed += (1.0 - rho) * irradiation * strip_area;
        }
        return result;
    }

    double period() const { return s_; }

  private:
    struct Segment {
        P2 a, b;
    };

    void factor() {
        const int n = 2 * kSlatStrips;
        for (int i = 0; i < n; ++i) perm_[i] = i;
        for (int col = 0; col < n; ++col) {
            int pivot = col;
            for (int r = col + 1; r < n; ++r)
                if (std::abs(lu_[r * n + col]) > std::abs(lu_[pivot * n + col]))
                    pivot = r;
            if (pivot != col) {
                for (int c = 0; c < n; ++c)
                    std::swap(lu_[col * n + c], lu_[pivot * n + c]);
                std::swap(perm_[col], perm_[pivot]);
            }
            double d = lu_[col * n + col];
            if (std::abs(d) < 1e-14)
                throw NumericError("singular radiosity system");
            for (int r = col + 1; r < n; ++r) {
                double factor = lu_[r * n + col] / d;
                lu_[r * n + col] = factor;
                for (int c = col + 1; c < n; ++c)
                    lu_[r * n + c] -= factor * lu_[col * n + c];
            }
        }
    }

    std::vector<double> lu_solve(const std::vector<double>& b) const {
        const int n = 2 * kSlatStrips;
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (int r = 1; r < n; ++r) {
            double sum = x[r];
            for (int c = 0; c < r; ++c) sum -= lu_[r * n + c] * x[c];
            x[r] = sum;
        }
        for (int r = n - 1; r >= 0; --r) {
            double sum = x[r];
            for (int c = r + 1; c < n; ++c) sum -= lu_[r * n + c] * x[c];
            x[r] = sum / lu_[r * n + r];
        }
        return x;
    }

    double w_, s_, rho_front_, rho_back_;
    std::vector<double> f_;  // row-major view factor matrix
    std::vector<double> lu_;
    std::vector<int> perm_;
};

// Cells are pure functions of (geometry, slat angle); annual runs touch
// only a couple of slat angles, so a small thread-local cache removes the
// per-hour construction cost.
const SlatCell& cached_cell(const SlatGeometry& g, double slat_angle_deg) {
    struct Entry {
        double w, s, rf, rb, psi;
        std::unique_ptr<SlatCell> cell;
    };
    thread_local std::vector<Entry> cache;
    for (const auto& e : cache)
        if (e.w == g.width_mm && e.s == g.separation_mm &&
            e.rf == g.reflectance_front && e.rb == g.reflectance_back &&
            e.psi == slat_angle_deg)
            return *e.cell;
    if (cache.size() >= 16) cache.erase(cache.begin());
    cache.push_back(Entry{g.width_mm, g.separation_mm, g.reflectance_front,
                          g.reflectance_back, slat_angle_deg,
                          std::make_unique<SlatCell>(g, slat_angle_deg)});
    return *cache.back().cell;
}

double blocked_fraction(const SlatGeometry& g, double slat_angle_deg,
                        double profile_angle_deg) {
    double psi = deg2rad(slat_angle_deg);
    double p = deg2rad(profile_angle_deg);
    return g.width_mm / g.separation_mm * std::abs(std::cos(psi - p)) /
           std::cos(p);
}

}  // namespace

void SlatGeometry::validate() const {
    if (width_mm < 0.0 || separation_mm <= 0.0)
        throw BadInput("slat width must be >= 0 and separation > 0");
    for (double v : {reflectance_front, reflectance_back, emissivity_front,
                     emissivity_back})
        if (v < 0.0 || v > 1.0)
            throw BadInput("slat reflectance/emissivity outside [0, 1]");
}

double beam_beam_transmittance(const SlatGeometry& geometry,
                               double slat_angle_deg,
                               double profile_angle_deg) {
    geometry.validate();
    check_angles(slat_angle_deg, profile_angle_deg);
    if (geometry.width_mm == 0.0) return 1.0;
    return std::clamp(
        1.0 - blocked_fraction(geometry, slat_angle_deg, profile_angle_deg),
        0.0, 1.0);
}

DiffuseExchangeResult diffuse_exchange(const SlatGeometry& geometry,
                                       double slat_angle_deg) {
    geometry.validate();
    if (slat_angle_deg < 0.0 || slat_angle_deg > 180.0)
        throw BadAngle("slat angle outside [0, 180]");

    DiffuseExchangeResult r;
    if (geometry.width_mm == 0.0) return r;  // open aperture

    const SlatCell& cell = cached_cell(geometry, slat_angle_deg);
    double period = cell.period();

    auto front = cell.exchange({}, 1.0, 1);  // unit radiosity on OUT
    r.tau_diffuse = front.to_in / period;
    r.rho_front = front.to_out / period;
    r.alpha = front.absorbed / period;

    auto back = cell.exchange({}, 1.0, 0);  // unit radiosity on IN
    r.rho_back = back.to_in / period;
    return r;
}

BeamSplitResult beam_diffuse_split(const SlatGeometry& geometry,
                                   double slat_angle_deg,
                                   double profile_angle_deg) {
    BeamSplitResult r;
    double tau_bb =
        beam_beam_transmittance(geometry, slat_angle_deg, profile_angle_deg);
    double intercepted = 1.0 - tau_bb;
    if (intercepted <= 0.0) return r;

    double psi = deg2rad(slat_angle_deg);
    double p = deg2rad(profile_angle_deg);

    // The beam strikes the face whose normal opposes it: the upward face
    // when cos(psi - p) > 0, the downward face otherwise. The illuminated
    // band runs from the slat tip inward, covering 1/blocked of the width.
    bool strikes_upper = std::cos(psi - p) > 0.0;
    double rho_struck = strikes_upper ? geometry.reflectance_front
                                      : geometry.reflectance_back;
    double blocked = blocked_fraction(geometry, slat_angle_deg,
                                      profile_angle_deg);
    double u_lit = std::max(0.0, 1.0 - 1.0 / blocked);

    r.alpha_beam = intercepted * (1.0 - rho_struck);
    double reemitted = intercepted * rho_struck;
    if (reemitted <= 0.0) return r;

    const int n = kSlatStrips;
    std::vector<double> emission(2 * n, 0.0);
    double lit_len = 1.0 - u_lit;
    for (int i = 0; i < n; ++i) {
        double lo = double(i) / n, hi = double(i + 1) / n;
        double overlap = std::max(0.0, std::min(hi, 1.0) - std::max(lo, u_lit));
        if (overlap <= 0.0) continue;
        int index = strikes_upper ? i : n + i;
        emission[index] = reemitted * overlap / lit_len;
    }

    const SlatCell& cell = cached_cell(geometry, slat_angle_deg);
    auto exchange = cell.exchange(emission, 0.0, -1);
    r.tau_beam_diffuse = exchange.to_in;
    r.rho_beam = exchange.to_out;
    r.alpha_beam += exchange.absorbed;
    return r;
}

BlindOpticalProps blind_properties(const BlindState& state,
                                   double profile_angle_deg, Band /*band*/) {
    if (state.location == BlindLocation::NoBlind)
        throw NoBlindPresent("blind_properties requires a blind");

    // Visible band: the slats carry a single published reflectance, so the
    // two bands share one record.
    BlindOpticalProps props;
    props.tau_beam_beam = beam_beam_transmittance(
        state.geometry, state.slat_angle_deg, profile_angle_deg);
    auto split = beam_diffuse_split(state.geometry, state.slat_angle_deg,
                                    profile_angle_deg);
    props.tau_beam_diffuse = split.tau_beam_diffuse;
    props.rho_beam_front = split.rho_beam;
    props.alpha_beam = split.alpha_beam;

    // Beam striking the indoor side sees the x-mirrored geometry.
    auto mirrored = beam_diffuse_split(
        state.geometry, 180.0 - state.slat_angle_deg, profile_angle_deg);
    props.rho_beam_back = mirrored.rho_beam;

    auto diff = diffuse_exchange(state.geometry, state.slat_angle_deg);
    props.tau_diffuse = diff.tau_diffuse;
    props.rho_diffuse_front = diff.rho_front;
    props.rho_diffuse_back = diff.rho_back;
    props.alpha_diffuse = diff.alpha;
    return props;
}

BlindOpticalProps unit_optics() { return BlindOpticalProps{}; }

McOptical mc_oracle(const SlatGeometry& geometry, double slat_angle_deg,
                    std::optional<double> profile_angle_deg,
                    std::uint64_t rays, std::uint64_t seed) {
    geometry.validate();
    if (slat_angle_deg < 0.0 || slat_angle_deg > 180.0)
        throw BadAngle("slat angle outside [0, 180]");
    if (profile_angle_deg) check_angles(slat_angle_deg, *profile_angle_deg);
    if (rays < 1) rays = 1;

    const double w = geometry.width_mm;
    const double s = geometry.separation_mm;
    McOptical tally;
    if (w == 0.0) {
        tally.tau_unscattered = 1.0;
        return tally;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    const double psi = deg2rad(slat_angle_deg);
    const double sin_psi = std::sin(psi);
    const double cos_psi = std::cos(psi);
    // Slat k runs from (0, k*s) to (X, k*s - w*cos_psi); upward face normal
    // n_up = (cos_psi, sin_psi). Indoor half-space is x < 0.
    const double ux = sin_psi, uy = -cos_psi;
    const double nx = cos_psi, ny = sin_psi;
    const double slab_depth = w * sin_psi;
    const bool vertical = slab_depth < 1e-12 * s;
    const double eps_t = 1e-9 * s;
    const double lattice_step = s * sin_psi;

    std::uint64_t n_tau0 = 0, n_taus = 0, n_rho = 0, n_alpha = 0;

    for (std::uint64_t i = 0; i < rays; ++i) {
        double y = (static_cast<double>(i) + u01(rng)) /
                   static_cast<double>(rays) * s;
        double px = vertical ? 1e-3 * s : slab_depth;
        double py = y;
        double dx, dy;
        if (profile_angle_deg) {
            double p = deg2rad(*profile_angle_deg);
            dx = -std::cos(p);
            dy = -std::sin(p);
        } else {
            double sth = 2.0 * u01(rng) - 1.0;
            dx = -std::sqrt(std::max(0.0, 1.0 - sth * sth));
            dy = sth;
        }

        int bounces = 0;
        enum class Fate { InFlight, EscapedIn, EscapedOut, Absorbed };
        Fate fate = Fate::InFlight;

        for (int bounce_iter = 0; bounce_iter < 400 && fate == Fate::InFlight;
             ++bounce_iter) {
            bool hit = false;
            double hx = 0.0, hy = 0.0;
            if (vertical) {
                // Slats collapse onto the line x = 0, covering min(w, s)
                // of each period.
                if (dx < 0.0 && px > 0.0) {
                    double t = -px / dx;
                    double yc = py + t * dy;
                    double frac = std::fmod(yc, s);
                    if (frac < 0.0) frac += s;
                    bool covered =
                        cos_psi > 0.0 ? frac >= s - std::min(w, s)  // tips down
                                      : frac <= std::min(w, s);     // tips up
                    if (covered) {
                        hit = true;
                        hx = 0.0;
                        hy = yc;
                    }
                }
                if (!hit) {
                    fate = dx < 0.0 ? Fate::EscapedIn : Fate::EscapedOut;
                    continue;
                }
            } else {
                double dn = dx * nx + dy * ny;
                double t_exit;
                if (dx > 1e-15)
                    t_exit = (slab_depth - px) / dx;
                else if (dx < -1e-15)
                    t_exit = -px / dx;
                else
                    t_exit = 1e30;

                if (std::abs(dn) < 1e-15) {
                    fate = dx < 0.0 ? Fate::EscapedIn : Fate::EscapedOut;
                    continue;
                }
                double cn = px * nx + py * ny;
                double k_real = cn / lattice_step;
                long long k = dn > 0.0
                                  ? static_cast<long long>(std::floor(k_real)) + 1
                                  : static_cast<long long>(std::ceil(k_real)) - 1;
                long long k_dir = dn > 0.0 ? 1 : -1;
                for (int cross = 0; cross < 200000; ++cross, k += k_dir) {
                    double t = (static_cast<double>(k) * lattice_step - cn) / dn;
                    if (t <= eps_t) continue;
                    if (t >= t_exit) break;
                    double cx = px + t * dx;
                    double cy = py + t * dy;
                    double u = cx * ux + (cy - static_cast<double>(k) * s) * uy;
                    if (u >= 0.0 && u <= w) {
                        hit = true;
                        hx = cx;
                        hy = cy;
                        break;
                    }
                }
                if (!hit) {
                    fate = dx < 0.0 ? Fate::EscapedIn : Fate::EscapedOut;
                    continue;
                }
            }

            ++bounces;
            double side = dx * nx + dy * ny;  // < 0: upward (front) face
            double rho = side < 0.0 ? geometry.reflectance_front
                                    : geometry.reflectance_back;
            if (u01(rng) >= rho) {
                fate = Fate::Absorbed;
                continue;
            }
            double mx = side < 0.0 ? nx : -nx;
            double my = side < 0.0 ? ny : -ny;
            double sth = 2.0 * u01(rng) - 1.0;
            double cth = std::sqrt(std::max(0.0, 1.0 - sth * sth));
            dx = mx * cth - my * sth;
            dy = my * cth + mx * sth;
            px = hx + mx * eps_t;
            py = hy + my * eps_t;
        }

        switch (fate) {
            case Fate::EscapedIn:
                if (bounces == 0)
                    ++n_tau0;
                else
                    ++n_taus;
                break;
            case Fate::EscapedOut:
                ++n_rho;
                break;
            default:
                ++n_alpha;  // absorbed, or bounce cap reached
                break;
        }
    }

    double n = static_cast<double>(rays);
    tally.tau_unscattered = static_cast<double>(n_tau0) / n;
    tally.tau_scattered = static_cast<double>(n_taus) / n;
    tally.rho = static_cast<double>(n_rho) / n;
    tally.alpha = static_cast<double>(n_alpha) / n;
    return tally;
}

}  // namespace rds
