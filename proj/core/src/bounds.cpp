#include "icol/bounds.hpp"

namespace icol {

std::string to_string(BoundSource source)
{
    switch (source) {
    case BoundSource::bipartite_diameter:
        return "bipartite-diameter";
    case BoundSource::nonempty_edges:
        return "nonempty-edges";
    case BoundSource::three_vertices:
        return "three-vertices";
    case BoundSource::triangle_free:
        return "triangle-free";
    }
    return "unknown";
}

BoundReport upper_bound_W(const StructuralProfile &profile, std::size_t num_vertices)
{
    const auto n = static_cast<Color>(num_vertices);
    const auto delta = static_cast<Color>(profile.max_degree);

    BoundReport report;
    report.lower_w = delta;

    BoundTerm bipartite{BoundSource::bipartite_diameter};
    if (profile.is_bipartite && profile.diameter && profile.edge_count > 0) {
        bipartite.applicable = true;
        bipartite.value = static_cast<Color>(*profile.diameter) * (delta - 1) + 1;
    }
    BoundTerm nonempty{BoundSource::nonempty_edges};
    if (profile.edge_count > 0) {
        nonempty.applicable = true;
        nonempty.value = 2 * n - 3;
    }
    BoundTerm three{BoundSource::three_vertices};
    if (num_vertices >= 3 && profile.edge_count > 0) {
        three.applicable = true;
        three.value = 2 * n - 4;
    }
    BoundTerm triangle_free{BoundSource::triangle_free};
    if (profile.is_triangle_free && profile.edge_count > 0) {
        triangle_free.applicable = true;
        triangle_free.value = n - 1;
    }
    report.terms = {bipartite, nonempty, three, triangle_free};

    for (const auto &term : report.terms) {
        if (!term.applicable)
            continue;
        if (!report.upper_W || term.value < *report.upper_W) {
            report.upper_W = term.value;
            report.tightest = term.source;
        }
    }
    return report;
}

MembershipVerdict family_membership(const Family &family)
{
    switch (family.kind) {
    case FamilyKind::complete:
        if (family.param == 0)
            return {};
        if (family.param % 2 == 1)
            return {Membership::not_in_N, std::nullopt};
        return {Membership::in_N, static_cast<Color>(family.param) - 1};
    case FamilyKind::hypercube:
        if (family.param == 0)
            return {};
        return {Membership::in_N, static_cast<Color>(family.param)};
    case FamilyKind::generic:
        break;
    }
    return {};
}

} // namespace icol
