#pragma once

// Rendering of CLI reports in the two output formats. `machine` is a
// line-oriented key=value dump, deterministic byte-for-byte for fixed
// inputs and seed; `text` is for humans.

#include "liegen/coadjoint.hpp"
#include "liegen/form.hpp"
#include "liegen/genproduct.hpp"
#include "liegen/io.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/prodstruct.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace liegen {

enum class OutputFormat { text, machine };

namespace detail {

inline std::string join_ints(const std::vector<int>& v, const std::string& sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

} // namespace detail

inline std::string render_info(const LieAlgebra& g, const Fingerprint& fp, OutputFormat fmt) {
    std::ostringstream os;
    const auto gens = minimal_generators(g);
    std::vector<std::string> gen_names;
    for (const int i : gens) gen_names.push_back(g.labels[i]);
    if (fmt == OutputFormat::machine) {
        os << "dim=" << g.dim << "\n";
        os << "derived_dims=" << detail::join_ints(fp.series.derived_dims) << "\n";
        os << "lower_central_dims=" << detail::join_ints(fp.series.lower_central_dims) << "\n";
        os << "center_dim=" << fp.series.center_dim << "\n";
        os << "b1=" << fp.series.b1 << "\n";
        os << "solvable=" << (fp.series.solvable ? 1 : 0) << "\n";
        os << "solvability_index=" << fp.series.solvability_index << "\n";
        os << "nilpotent=" << (fp.series.nilpotent ? 1 : 0) << "\n";
        os << "N=" << fp.invariant_count << "\n";
        os << "j0=" << fp.j0 << "\n";
        os << "generators=";
        for (std::size_t i = 0; i < gen_names.size(); ++i) os << (i ? "," : "") << gen_names[i];
        os << "\n";
    } else {
        os << "dimension:          " << g.dim << "\n";
        os << "derived dims:       [" << detail::join_ints(fp.series.derived_dims, ", ") << "]\n";
        os << "lower central dims: [" << detail::join_ints(fp.series.lower_central_dims, ", ") << "]\n";
        os << "center dim:         " << fp.series.center_dim << "\n";
        os << "b1:                 " << fp.series.b1 << "\n";
        os << "solvable:           " << detail::yn(fp.series.solvable);
        if (fp.series.solvable) os << " (index " << fp.series.solvability_index << ")";
        os << "\n";
        os << "nilpotent:          " << detail::yn(fp.series.nilpotent) << "\n";
        os << "invariant count N:  " << fp.invariant_count << "\n";
        os << "generic j0:         " << fp.j0 << "\n";
        os << "minimal generators:";
        for (const auto& n : gen_names) os << " " << n;
        os << "\n";
    }
    return os.str();
}

inline std::string render_invariants(const LieAlgebra& g, const InvariantReport& r, int certified_rank,
                                     OutputFormat fmt) {
    std::ostringstream os;
    const auto names = dual_labels(g);
    std::ostringstream witness;
    for (std::size_t i = 0; i < r.witness_coeffs.size(); ++i) {
        if (r.witness_coeffs[i] == 0) continue;
        witness << format_coefficient_term(r.witness_coeffs[i], "d" + names[i], witness.str().empty());
    }
    if (fmt == OutputFormat::machine) {
        os << "dim=" << r.dim << "\n";
        os << "N_rank=" << r.n_rank << "\n";
        os << "rank_A=" << r.rank_a << "\n";
        os << "j0=" << r.j0 << "\n";
        os << "N_wedge=" << r.n_wedge << "\n";
        os << "certified_rank=" << certified_rank << "\n";
        os << "certificate=" << r.generic_certificate.str() << "\n";
        os << "witness=" << (witness.str().empty() ? "0" : witness.str()) << "\n";
    } else {
        os << "dimension:               " << r.dim << "\n";
        os << "rank A(g):               " << r.rank_a << " (sampled oracle: " << certified_rank << ")\n";
        os << "N by rank:               " << r.n_rank << "\n";
        os << "generic j0:              " << r.j0 << "\n";
        os << "N by wedge powers:       " << r.n_wedge << "\n";
        os << "wedge certificate:       " << r.generic_certificate.str() << "\n";
        os << "max-rank witness:        " << (witness.str().empty() ? "0" : witness.str()) << "\n";
        os << "routes agree:            " << detail::yn(r.n_rank == r.n_wedge) << "\n";
    }
    return os.str();
}

inline std::string render_extension_identities(const ExtensionIdentityReport& r, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::machine) {
        os << "b1=" << r.b1_e << " b1_sum=" << r.b1_1 + r.b1_2 << " ok=" << r.b1_ok << "\n";
        os << "derived1=" << r.d1_e << " derived1_sum=" << r.d1_1 + r.d1_2 + r.m1m2 << " ok=" << r.d1_ok << "\n";
        os << "higher_derived=" << detail::join_ints(r.higher_e)
           << " higher_sum=" << detail::join_ints(r.higher_sum) << " ok=" << r.higher_ok << "\n";
        os << "center=" << r.z_e << " center_sum=" << r.z_1 + r.z_2 + r.m1m2 << " ok=" << r.z_ok << "\n";
        os << "center_refined_sum=" << r.zcap_1 + r.zcap_2 + r.m1m2 << " ok=" << r.z_refined_ok << "\n";
        os << "all_four=" << r.all_four_ok << "\n";
    } else {
        os << "(1) b1:             " << r.b1_e << " vs " << r.b1_1 << " + " << r.b1_2 << "  ->  "
           << (r.b1_ok ? "pass" : "FAIL") << "\n";
        os << "(2) dim D1:         " << r.d1_e << " vs " << r.d1_1 << " + " << r.d1_2 << " + " << r.m1m2
           << "  ->  " << (r.d1_ok ? "pass" : "FAIL") << "\n";
        os << "(3) dim Di, i>=2:   [" << detail::join_ints(r.higher_e, ", ") << "] vs ["
           << detail::join_ints(r.higher_sum, ", ") << "]  ->  " << (r.higher_ok ? "pass" : "FAIL") << "\n";
        os << "(4) dim Z:          " << r.z_e << " vs " << r.z_1 << " + " << r.z_2 << " + " << r.m1m2
           << "  ->  " << (r.z_ok ? "pass" : "FAIL") << "\n";
        os << "    refined (Z^D1): " << r.z_e << " vs " << r.zcap_1 << " + " << r.zcap_2 << " + " << r.m1m2
           << "  ->  " << (r.z_refined_ok ? "pass" : "FAIL") << "\n";
        if (!r.inputs_solvable) os << "warning: a factor is not solvable; identities are not claimed\n";
    }
    return os.str();
}

inline std::string render_types(const std::vector<DecompositionType>& types, OutputFormat fmt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const auto& t = types[i];
        if (fmt == OutputFormat::machine) {
            os << "case=" << i + 1 << " d1=" << t.d1 << " m1=" << t.m1 << " d2=" << t.d2 << " m2=" << t.m2
               << " nilpotent=" << (t.forces_nilpotent ? 1 : 0) << "\n";
        } else {
            os << i + 1 << ". (d1,m1) = (" << t.d1 << "," << t.m1 << "), (d2,m2) = (" << t.d2 << "," << t.m2
               << ")";
            if (t.forces_nilpotent) os << "   [abelian factors: product is nilpotent]";
            os << "\n";
        }
    }
    return os.str();
}

inline std::string render_structure(const ProductStructure& ps, OutputFormat fmt) {
    std::ostringstream os;
    const auto& r = ps.report;
    if (fmt == OutputFormat::machine) {
        os << "involutive=" << r.involutive << "\n";
        os << "nontrivial=" << r.nontrivial << "\n";
        os << "automorphism=" << r.automorphism << "\n";
        os << "integrable=" << r.integrable << "\n";
        os << "accepted=" << r.accepted << "\n";
        os << "plus_dim=" << r.plus_dim << "\n";
        os << "minus_dim=" << r.minus_dim << "\n";
        os << "plus_closed=" << r.plus_closed << "\n";
        os << "minus_closed=" << r.minus_closed << "\n";
        os << "paracomplex=" << (r.plus_dim == r.minus_dim) << "\n";
    } else {
        const auto fails = [&](const std::vector<std::pair<int, int>>& v) {
            std::ostringstream fs;
            for (std::size_t i = 0; i < v.size() && i < 4; ++i)
                fs << (i ? ", " : "  fails at: ") << "(" << ps.algebra.labels[v[i].first] << ","
                   << ps.algebra.labels[v[i].second] << ")";
            if (v.size() > 4) fs << ", ...";
            return fs.str();
        };
        os << "involutive (E^2 = id):  " << detail::yn(r.involutive) << "\n";
        os << "nontrivial (E != +-id): " << detail::yn(r.nontrivial) << "\n";
        os << "automorphism:           " << detail::yn(r.automorphism) << fails(r.automorphism_failures)
           << "\n";
        os << "integrable:             " << detail::yn(r.integrable) << fails(r.integrability_failures)
           << "\n";
        os << "accepted:               " << detail::yn(r.accepted) << "\n";
        os << "eigenspace dims:        (" << r.plus_dim << ", " << r.minus_dim << ")\n";
        os << "g+ closed under [,]:    " << detail::yn(r.plus_closed) << "\n";
        os << "g- closed under [,]:    " << detail::yn(r.minus_closed) << "\n";
        os << "paracomplex:            " << detail::yn(r.plus_dim == r.minus_dim) << "\n";
    }
    return os.str();
}

inline std::string render_extension(const ExtensionResult& ext, std::size_t index, OutputFormat fmt) {
    std::ostringstream os;
    std::ostringstream lambda_str;
    for (std::size_t i = 0; i < ext.lambdas.size(); ++i)
        lambda_str << (i ? "," : "") << (ext.lambdas[i] > 0 ? "+1" : "-1");
    if (fmt == OutputFormat::machine) {
        os << "extension=" << index << " lambdas=" << lambda_str.str() << " plus_dim="
           << ext.structure.report.plus_dim << " minus_dim=" << ext.structure.report.minus_dim
           << " integrable=" << ext.structure.report.integrable
           << " automorphism=" << ext.structure.report.automorphism
           << " paracomplex=" << (ext.structure.report.plus_dim == ext.structure.report.minus_dim) << "\n";
    } else {
        os << "extension " << index << ": signs on adjoined elements (";
        bool first = true;
        for (const auto& lam : ext.lambdas) {
            os << (first ? "" : ", ") << (lam > 0 ? "+" : "-");
            first = false;
        }
        os << "), dims (" << ext.structure.report.plus_dim << ", " << ext.structure.report.minus_dim
           << "), integrable " << detail::yn(ext.structure.report.integrable) << ", paracomplex "
           << detail::yn(ext.structure.report.plus_dim == ext.structure.report.minus_dim) << "\n";
    }
    return os.str();
}

} // namespace liegen
