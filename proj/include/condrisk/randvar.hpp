#ifndef CONDRISK_RANDVAR_HPP
#define CONDRISK_RANDVAR_HPP

#include <vector>

#include "condrisk/prob.hpp"

namespace condrisk {

/// One finite real per atom. Immutable value type; arithmetic is pointwise.
class RandVar {
public:
    RandVar(SpacePtr space, std::vector<double> values);
    static RandVar constant(const SpacePtr& space, double c);

    const SpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(v_.size()); }
    double operator[](int atom) const { return v_[atom]; }
    const std::vector<double>& values() const { return v_; }

private:
    SpacePtr space_;
    std::vector<double> v_;
};

/// One extended real (+-inf allowed, NaN banned) per atom. Holds essential
/// infima, gauges and penalty values.
class ExtRandVar {
public:
    ExtRandVar(SpacePtr space, std::vector<double> values);
    ExtRandVar(const RandVar& x);  // embedding, implicit by design

    static ExtRandVar constant(const SpacePtr& space, double c);

    const SpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(v_.size()); }
    double operator[](int atom) const { return v_[atom]; }
    const std::vector<double>& values() const { return v_; }

    bool is_finite() const;
    /// Throws InfMinusInf when the embedded value is not finite everywhere.
    RandVar as_randvar() const;

private:
    SpacePtr space_;
    std::vector<double> v_;
};

RandVar operator+(const RandVar& x, const RandVar& y);
RandVar operator-(const RandVar& x, const RandVar& y);
RandVar operator-(const RandVar& x);
RandVar operator*(const RandVar& x, const RandVar& y);
RandVar operator+(const RandVar& x, double c);
RandVar operator*(double c, const RandVar& x);
RandVar abs(const RandVar& x);
RandVar pointwise_min(const RandVar& x, const RandVar& y);
RandVar pointwise_max(const RandVar& x, const RandVar& y);
double max_abs(const RandVar& x);

// inf + finite = inf; inf - inf throws InfMinusInf.
ExtRandVar ext_add(const ExtRandVar& x, const ExtRandVar& y);
ExtRandVar ext_sub(const ExtRandVar& x, const ExtRandVar& y);

enum class Rel { Geq, Gt };

/// Atoms on which the pointwise relation x `rel` y holds.
std::vector<int> compare(const RandVar& x, const RandVar& y, Rel rel);

RandVar ess_inf(const std::vector<RandVar>& family);
RandVar ess_sup(const std::vector<RandVar>& family);

RandVar cond_expect(const RandVar& x, const SubAlgebra& f);

/// Constancy on every block of f.
bool is_measurable(const RandVar& x, const SubAlgebra& f, double tol = 0.0);

/// Zero outside the listed blocks of f, x inside (exact copy).
RandVar mask_blocks(const RandVar& x, const SubAlgebra& f, const std::vector<int>& blocks);

/// The unique X with 1_{A_n} X = 1_{A_n} parts[n]; entries are copied, never
/// recomputed, so the identity is bitwise.
RandVar concatenate(const SubAlgebra& partition, const std::vector<RandVar>& parts,
                    const SubAlgebra& f);

/// Member of the f-concatenation closure of `generators` within eps of the
/// closure's essential infimum. On finite spaces the blockwise minimum is
/// attained whenever the closure is downward directed (always when f is the
/// finest algebra or the generators are f-measurable); otherwise throws
/// NotAttainable naming the offending block.
RandVar eps_attain_inf(const std::vector<RandVar>& generators, const SubAlgebra& f,
                       const RandVar& eps);

} // namespace condrisk

#endif
