#include "wforge/domain.hpp"

#include <algorithm>
#include <cmath>

namespace wf {

Domain Domain::rectangle(cplx lo, cplx hi, std::vector<Puncture> punctures,
                         double pole_margin) {
    if (!(lo.real() < hi.real() && lo.imag() < hi.imag()))
        throw ConfigError("rectangle corners must satisfy lo < hi componentwise");
    if (!(pole_margin > 0)) throw ConfigError("pole_margin must be positive");
    Domain d;
    d.kind_ = Kind::Rectangle;
    d.lo_ = lo;
    d.hi_ = hi;
    d.punctures_ = std::move(punctures);
    d.pole_margin_ = pole_margin;
    for (const auto& p : d.punctures_)
        if (!d.contains(p.point)) throw ConfigError("puncture lies outside the domain");
    return d;
}

Domain Domain::annulus(cplx center, double inner, double outer,
                       std::vector<Puncture> punctures, double pole_margin) {
    if (!(0 <= inner && inner < outer)) throw ConfigError("annulus needs 0 <= inner < outer");
    if (!(pole_margin > 0)) throw ConfigError("pole_margin must be positive");
    Domain d;
    d.kind_ = Kind::Annulus;
    d.center_ = center;
    d.inner_ = inner;
    d.outer_ = outer;
    d.punctures_ = std::move(punctures);
    d.pole_margin_ = pole_margin;
    // Punctures may sit in the annulus hole (a pole of the data there is
    // common); only punctures inside the ring must obey the margin rules.
    return d;
}

bool Domain::contains(cplx z) const {
    if (kind_ == Kind::Rectangle) {
        return lo_.real() <= z.real() && z.real() <= hi_.real() && lo_.imag() <= z.imag() &&
               z.imag() <= hi_.imag();
    }
    double r = std::abs(z - center_);
    return inner_ <= r && r <= outer_;
}

double Domain::distance_to_punctures(cplx z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : punctures_) d = std::min(d, std::abs(z - p.point));
    return d;
}

bool Domain::admissible(cplx z) const {
    return contains(z) && distance_to_punctures(z) >= pole_margin_;
}

bool Domain::is_puncture(cplx z, double tol) const {
    for (const auto& p : punctures_)
        if (std::abs(z - p.point) <= tol) return true;
    return false;
}

std::vector<cplx> Domain::sample(int count) const {
    std::vector<cplx> out;
    out.reserve(count);
    std::uint64_t index = 1;
    while (static_cast<int>(out.size()) < count && index < 64ull * count + 4096) {
        double u = halton(index, 2), v = halton(index, 3);
        ++index;
        cplx z;
        if (kind_ == Kind::Rectangle) {
            z = cplx(lo_.real() + u * (hi_.real() - lo_.real()),
                     lo_.imag() + v * (hi_.imag() - lo_.imag()));
        } else {
            // area-uniform in the ring
            double r = std::sqrt(inner_ * inner_ + u * (outer_ * outer_ - inner_ * inner_));
            z = center_ + std::polar(r, 2.0 * M_PI * v);
        }
        if (admissible(z)) out.push_back(z);
    }
    return out;
}

}  // namespace wf
