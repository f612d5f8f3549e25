#pragma once

// Models whose completion has several d-dimensional monomial components.
// Lengths add over components, so G and the mixed multiplicities are
// weighted sums of the per-component values.

#include <mixmul/multiplicity.hpp>

#include <string>
#include <vector>

namespace mixmul {

struct Component {
    std::int64_t weight = 1;
    std::vector<Filtration> filtrations; // images of the r filtrations
};

struct ComponentModel {
    std::vector<Component> components;

    std::size_t dim() const { return components.at(0).filtrations.at(0).dim(); }
    std::size_t r() const { return components.at(0).filtrations.size(); }

    std::vector<std::string> problems() const
    {
        std::vector<std::string> out;
        if (components.empty() || components.front().filtrations.empty())
            return {"model has no components"};
        for (const auto &c : components) {
            if (c.weight < 1)
                out.push_back("component weight must be positive");
            if (c.filtrations.size() != r())
                out.push_back("components disagree on the number of filtrations");
            for (const auto &F : c.filtrations)
                if (F.dim() != dim())
                    out.push_back("dimension mismatch");
        }
        return out;
    }

    void validate() const
    {
        const auto p = problems();
        if (!p.empty())
            throw Error(p.front());
    }
};

inline ComponentModel single_component(std::vector<Filtration> Fs, std::int64_t weight = 1)
{
    return {{Component{weight, std::move(Fs)}}};
}

inline LimitEstimate component_G(const ComponentModel &model, const Levels &n, const MixedOptions &opt = {})
{
    model.validate();
    LimitEstimate total;
    total.method = opt.backend == Backend::truncation_exact ? LimitEstimate::Method::truncation_exact
                                                           : LimitEstimate::Method::direct_sequence;
    total.value = 0;
    total.lower_evidence = 0;
    Rational refined = 0;
    std::optional<Rational> certified = Rational(0);
    for (std::size_t k = 0; k < model.components.size(); ++k) {
        const auto &c = model.components[k];
        const auto est = G_estimate(c.filtrations, n, opt);
        const Rational w(static_cast<long>(c.weight));
        total.value += w * est.value;
        total.lower_evidence += w * est.lower_evidence;
        refined += w * est.best();
        if (certified && est.certified)
            *certified += w * *est.certified;
        else
            certified.reset();
        total.error_note += (k ? "; " : "") + std::string("component ") + std::to_string(k + 1) + ": " + est.error_note;
    }
    if (!total.exact()) {
        total.refined = refined;
        total.certified = certified;
    }
    return total;
}

// Two plane components; I restricts to m^n on the first and (x) + m^n on
// the second, J the other way round.
inline ComponentModel example1_model()
{
    const auto m = MonomialIdeal::maximal(2);
    const auto x = make_ideal(2, {{1, 0}});
    return {{Component{1, {adic(m), fixed_plus_adic(x, m)}}, Component{1, {fixed_plus_adic(x, m), adic(m)}}}};
}

inline MixedMultiplicityReport component_mixed(const ComponentModel &model, const MixedOptions &opt = {})
{
    model.validate();
    MixedMultiplicityReport rep;
    rep.d = model.dim();
    rep.r = model.r();
    rep.backend = opt.backend;
    if (opt.backend == Backend::direct)
        rep.ladder = opt.ladder;
    if (opt.truncation_level > 0)
        rep.truncation_level = opt.truncation_level;
    const bool exact = opt.backend == Backend::truncation_exact;
    std::atomic<bool> all_certified{true};
    rep.coeffs = fit_mixed(
        rep.r, rep.d,
        [&](const Levels &n) {
            const auto est = component_G(model, n, opt);
            if (!est.exact_or_certified())
                all_certified = false;
            return est.best();
        },
        opt.threads, exact, &rep.samples, &rep.sample_values);
    if (!exact && opt.certify && all_certified)
        for (auto &c : rep.coeffs)
            c.exact = true;
    return rep;
}

} // namespace mixmul
