// Planar parameter domains: an axis-aligned rectangle or an annulus, with a
// finite set of declared punctures. All sampling and path construction keeps
// at least pole_margin away from every puncture.
#pragma once

#include <vector>

#include "wforge/errors.hpp"
#include "wforge/numeric.hpp"

namespace wf {

struct Puncture {
    cplx point;
    int declared_nu_pole_order = 0;  // >= 0; 0 marks a plain domain puncture
};

class Domain {
public:
    enum class Kind { Rectangle, Annulus };

    static Domain rectangle(cplx lo, cplx hi, std::vector<Puncture> punctures = {},
                            double pole_margin = 0.05);
    static Domain annulus(cplx center, double inner, double outer,
                          std::vector<Puncture> punctures = {}, double pole_margin = 0.05);

    Kind kind() const { return kind_; }
    cplx rect_lo() const { return lo_; }
    cplx rect_hi() const { return hi_; }
    cplx center() const { return center_; }
    double inner_radius() const { return inner_; }
    double outer_radius() const { return outer_; }
    double pole_margin() const { return pole_margin_; }
    const std::vector<Puncture>& punctures() const { return punctures_; }

    bool contains(cplx z) const;
    // true if z is inside the domain and at distance >= pole_margin from all punctures
    bool admissible(cplx z) const;
    double distance_to_punctures(cplx z) const;
    bool is_puncture(cplx z, double tol = 1e-12) const;

    // Deterministic low-discrepancy sample of admissible points (Halton 2/3).
    std::vector<cplx> sample(int count) const;

private:
    Kind kind_ = Kind::Rectangle;
    cplx lo_{}, hi_{};            // rectangle corners
    cplx center_{};               // annulus
    double inner_ = 0, outer_ = 0;
    std::vector<Puncture> punctures_;
    double pole_margin_ = 0.05;
};

}  // namespace wf
