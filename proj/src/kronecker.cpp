#include "spaceform/kronecker.hpp"

namespace spaceform {

void SearchTask::validate() const {
    if (generators.empty() || generators.size() != targets.size())
        throw ValidationError("generators and targets must align and be non-empty");
    for (const auto& g : generators)
        if (g.is_rational())
            throw ValidationError("generator not irrational");
    for (const auto& t : targets) {
        if (t.value.sign() < 0 || t.value > Rational(1))
            throw ValidationError("target values must lie in [0,1]");
        if (t.tolerance.sign() <= 0)
            throw ValidationError("tolerances must be positive");
    }
    if (m_max < 1)
        throw ValidationError("m_max must be >= 1");
    if (modulus < 1)
        throw ValidationError("modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw ValidationError("residue must lie in [0, modulus)");
}

namespace {

// Certified |{m g} - t| < tol: refine the enclosure until the verdict is
// unambiguous.  Equality with the rational thresholds is impossible for an
// irrational g, so the refinement terminates (or the precision cap trips).
bool certified_hit(const SymbolicReal& g, long m, const SearchTarget& t,
                   unsigned bits) {
    unsigned max_bits = default_max_bits(bits);
    Rational lo_edge = t.value - t.tolerance;
    Rational hi_edge = t.value + t.tolerance;
    for (unsigned b = bits;;) {
        Enclosure e = frac_eval(g, Int(m), b, max_bits);
        if (e.lo > lo_edge && e.hi < hi_edge)
            return true;
        if (e.hi <= lo_edge || e.lo >= hi_edge)
            return false;
        if (b >= max_bits)
            throw PrecisionError("undecidable proximity test at iterate " +
                                 std::to_string(m));
        b = b > max_bits / 2 ? max_bits : b * 2;
    }
}

} // namespace

std::optional<long> kronecker_search(const SearchTask& task,
                                     unsigned precision_bits) {
    task.validate();
    long start = task.residue == 0 ? task.modulus : task.residue;
    for (long m = start; m <= task.m_max; m += task.modulus) {
        bool all = true;
        for (std::size_t i = 0; i < task.generators.size(); ++i)
            if (!certified_hit(task.generators[i], m, task.targets[i],
                               precision_bits)) {
                all = false;
                break;
            }
        if (all)
            return m;
    }
    return std::nullopt;
}

void AuxContext::validate() const {
    system.validate_structure();
    if (theta_hats.size() != system.k())
        throw ValidationError("rotation fractions must align with the system");
    if (k1 < 1 || k1 > system.k())
        throw ValidationError("k1 must lie in [1, k]");
    for (std::size_t j = 0; j < system.k(); ++j) {
        bool zero = system.offsets[j] == Rational(0);
        if (j < k1 && zero)
            throw ValidationError("offsets before k1 must be nonzero");
        if (j >= k1 && !zero)
            throw ValidationError("offsets from k1 on must be zero");
    }
}

AuxValue aux_f(const AuxContext& ctx, long L, const Rational& x) {
    AuxValue out;
    long shift = ctx.p_bar * L;
    for (std::size_t j = 1; j < ctx.system.k(); ++j) {
        Rational inner = frac(Rational(ctx.system.weights[j]) * x +
                              ctx.system.offsets[j]);
        if (inner == Rational(0))
            out.at_discontinuity = true;
        SymbolicReal arg = Int(shift) * ctx.theta_hats[j] + inner;
        if (arg.is_rational())
            out.value += frac(arg.rational_part());
        else
            out.value += arg - Rational(floor_certified(arg));
    }
    return out;
}

Rational boundary_gap(const AuxContext& ctx) {
    Partition part = partition(ctx.system);
    long d = static_cast<long>(part.k0_plus.size()) -
             static_cast<long>(part.k0_minus.size());
    return Rational(d < 0 ? -d : d);
}

AuxValue aux_g(const MultiAuxContext& ctx, long L, const std::vector<Rational>& xs) {
    std::size_t kk = ctx.weight_rows.size();
    if (ctx.offsets.size() != kk || ctx.theta_hats.size() != kk)
        throw ValidationError("weight rows, offsets and rotation fractions must align");
    AuxValue out;
    long shift = ctx.p_bar * L;
    for (std::size_t j = 1; j < kk; ++j) {
        if (ctx.weight_rows[j].size() != xs.size())
            throw ValidationError("weight row width must match the point");
        Rational lin = ctx.offsets[j];
        for (std::size_t l = 0; l < xs.size(); ++l)
            lin += Rational(ctx.weight_rows[j][l]) * xs[l];
        Rational inner = frac(lin);
        if (inner == Rational(0))
            out.at_discontinuity = true;
        SymbolicReal arg = Int(shift) * ctx.theta_hats[j] + inner;
        if (arg.is_rational())
            out.value += frac(arg.rational_part());
        else
            out.value += arg - Rational(floor_certified(arg));
    }
    return out;
}

} // namespace spaceform
