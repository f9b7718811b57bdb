#include "modspace/family.hpp"

#include <cmath>
#include <random>

namespace modspace {

std::vector<FamilyMember> test_family(std::uint64_t seed, double radius, int count) {
    if (count < 0)
        throw ParameterError("test_family: negative count");
    if (!(radius > 0.0))
        throw ParameterError("test_family: radius must be positive");

    std::vector<FamilyMember> family;
    family.reserve(static_cast<std::size_t>(count));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> frac(0.5, 0.8);
    std::uniform_real_distribution<double> wave_freq(1.0, 6.0);
    std::uniform_real_distribution<double> chirp_rate(0.5, 4.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    for (int i = 0; i < count; ++i) {
        if (i == 0) {
            family.push_back({"bump", FunctionExpr::bump(radius)});
            continue;
        }
        const double r = frac(rng) * radius;
        const double b = unit(rng) * (radius - r); // keeps support inside B_radius
        const double k = std::round(wave_freq(rng));
        const double lam = chirp_rate(rng);
        FunctionExpr envelope = FunctionExpr::bump(r).translated(b);
        switch (i % 4) {
        case 1:
            family.push_back({"bump*wave" + std::to_string(i),
                              envelope * FunctionExpr::plane_wave(k)});
            break;
        case 2:
            family.push_back({"bump*chirp" + std::to_string(i),
                              envelope * FunctionExpr::chirp(lam)});
            break;
        case 3:
            family.push_back({"bump*wave*chirp" + std::to_string(i),
                              envelope * FunctionExpr::plane_wave(k) *
                                  FunctionExpr::chirp(lam)});
            break;
        default:
            family.push_back({"bump_shift" + std::to_string(i), envelope});
            break;
        }
    }
    return family;
}

std::vector<FunctionExpr> test_family_exprs(std::uint64_t seed, double radius,
                                            int count) {
    std::vector<FunctionExpr> out;
    auto fam = test_family(seed, radius, count);
    out.reserve(fam.size());
    for (auto& m : fam) out.push_back(std::move(m.expr));
    return out;
}

} // namespace modspace
