#pragma once

#include "classify.hpp"
#include "report.hpp"

namespace lie4 {

// Commutator table: the listed class of every grid instance against its computed invariants.
inline TableReport verify_table_comm() {
    TableReport rep{"comm", {}};
    for (const auto& in : grid()) {
        auto g = make(in);
        CommClass listed = commutator_class(in.family, in.params);
        CommClass got = computed_commutator_class(g);
        rep.add({"comm/" + instance_name(in), instance_name(in), std::string("[g,g] is ") + comm_class_name(listed),
                 listed == got, std::string("computed ") + comm_class_name(got), ""});
    }
    // Each row is nonempty and the classes are pairwise distinct by construction.
    for (CommClass c : {CommClass::Zero, CommClass::Line, CommClass::PlaneNoCenter, CommClass::PlaneCenter,
                        CommClass::Space, CommClass::Heisenberg}) {
        size_t n = 0;
        for (const auto& in : grid()) n += commutator_class(in.family, in.params) == c;
        rep.add({std::string("comm/row/") + comm_class_name(c), comm_class_name(c), "row is populated", n > 0,
                 std::to_string(n) + " grid instances", ""});
    }
    return rep;
}

inline std::vector<Instance> appendix1_samples() {
    auto q = [](long a, long b = 1) { return make_q(a, b); };
    using F = Family;
    std::vector<Instance> out = {{F::N4, {}}, {F::AffC, {}}, {F::R4_gen, {}}, {F::D4, {}}, {F::H4, {}}};
    for (auto l : {q(0), q(2), q(-1, 2), q(1)}) out.push_back({F::R4_lambda, {l}});
    for (auto [m, l] : std::vector<std::pair<Q, Q>>{{q(1, 3), q(1, 2)}, {q(-1), q(-1, 2)}, {q(1), q(1)}, {q(-1, 2), q(1)}})
        out.push_back({F::R4_mu_lambda, {m, l}});
    for (auto [m, l] : std::vector<std::pair<Q, Q>>{{q(1), q(0)}, {q(2), q(1)}, {q(1, 2), q(-1)}})
        out.push_back({F::R4p_mu_lambda, {m, l}});
    for (auto l : {q(1, 2), q(3, 4), q(1), q(2)}) out.push_back({F::D4_lambda, {l}});
    for (auto l : {q(0), q(1, 2), q(1)}) out.push_back({F::D4p_lambda, {l}});
    return out;
}

// Matrix realizations close under commutators and identify as their family.
inline TableReport verify_table_appendix1() {
    TableReport rep{"appendix1", {}};
    for (const auto& in : appendix1_samples()) {
        auto blocks = matrix_realizations(in.family, in.params);
        for (size_t b = 0; b < blocks.size(); ++b) {
            std::string size = std::to_string(blocks[b][0].rows()) + "x" + std::to_string(blocks[b][0].rows());
            CheckItem it{"appendix1/" + instance_name(in) + "/" + size, instance_name(in),
                         size + " realization identifies as " + instance_name(in), false, "", ""};
            try {
                auto r = identify(from_matrices(blocks[b]));
                it.ok = r.verified && r.instance == in;
                it.detail = instance_name(r.instance);
            } catch (const Error& e) {
                it.detail = std::string(errc_name(e.code)) + ": " + e.what();
            }
            rep.add(it);
        }
    }
    // Decomposable families have no listed realization.
    CheckItem it{"appendix1/decomposable", "R x h3", "NoRealizationListed", false, "", ""};
    try {
        matrix_realizations(Family::RxH3, {});
    } catch (const Error& e) {
        it.ok = e.code == Errc::NoRealizationListed;
        it.detail = errc_name(e.code);
    }
    rep.add(it);
    return rep;
}

}  // namespace lie4
