// Acceptance suite: the eight headline checks, each printing one pass/fail
// line. Tolerances are exact integer equalities throughout.
#include "ulrich/cli.hpp"
#include "ulrich/config.hpp"
#include "ulrich/doubling.hpp"
#include "ulrich/engine.hpp"
#include "ulrich/family.hpp"
#include "ulrich/serialize.hpp"

#include "enum_oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>

using namespace ulrich;
using nlohmann::json;

namespace {

NumericalSemigroup sg(std::vector<long long> gens)
{
    return NumericalSemigroup::from_generators(std::move(gens));
}

void report(int criterion, const char* what, bool pass)
{
    std::printf("criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", what);
    std::fflush(stdout);
    CHECK(pass);
}

json run_cli_json(std::vector<std::string> args, int expected_exit)
{
    std::vector<const char*> argv{"ulrich-cli"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    REQUIRE(code == expected_exit);
    return json::parse(out.str());
}

std::vector<std::vector<long long>> certificate_generators(const json& doc)
{
    std::vector<std::vector<long long>> out;
    for (const auto& cert : doc.at("certificates"))
        out.push_back(cert.at("ideal").at("generators").get<std::vector<long long>>());
    return out;
}

} // namespace

TEST_CASE("criterion 1: the maximal ideal is the only Ulrich ideal over almost "
          "symmetric non-symmetric semigroups")
{
    auto started = std::chrono::steady_clock::now();

    json doc = run_cli_json({"enumerate", "3,4,5", "--bound", "40"}, 0);
    bool exact_345 =
        certificate_generators(doc) == std::vector<std::vector<long long>>{{3, 4, 5}};

    // Suite across every almost-symmetric non-symmetric H with F <= 12:
    // every enumerated ideal is the maximal ideal, and the list is exactly
    // {m} precisely in the minimal-multiplicity case.
    auto family = semigroups_with_frobenius_at_most(12);
    bool suite_ok = true;
    long long families_checked = 0;
    for (const NumericalSemigroup& h : family) {
        if (is_symmetric(h) || !is_almost_symmetric(h))
            continue;
        ++families_checked;
        auto certs = enumerate_ulrich(h, 40);
        for (const UlrichCertificate& cert : certs)
            suite_ok = suite_ok && cert.ideal.min_generators() == h.generators();
        bool minimal_mult = h.multiplicity() == h.embedding_dimension();
        suite_ok = suite_ok && (certs.size() == 1) == minimal_mult;
    }
    suite_ok = suite_ok && families_checked > 0;

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    bool in_time = seconds < 60.0;
    std::printf("  (family of %zu, %lld almost symmetric non-symmetric, %.2f s)\n",
                family.size(), families_checked, seconds);
    report(1, "uniqueness of the maximal ideal across the F <= 12 family",
           exact_345 && suite_ok && in_time);
}

TEST_CASE("criterion 2: the two Ulrich ideals of <4,5>")
{
    NumericalSemigroup h = sg({4, 5});
    UlrichCertificate c1 = is_ulrich(h, ideal_from_generators(h, {4, 10}));
    UlrichCertificate c2 = is_ulrich(h, ideal_from_generators(h, {8, 10}));
    bool certified = c1.ulrich() && c1.nu == 2 && c1.colength == 2 && c2.ulrich() && c2.nu == 2
                     && c2.colength == 4;

    json doc = run_cli_json({"enumerate", "4,5", "--bound", "30"}, 0);
    auto lists = certificate_generators(doc);
    bool listed = std::find(lists.begin(), lists.end(), std::vector<long long>{4, 10})
                      != lists.end()
                  && std::find(lists.begin(), lists.end(), std::vector<long long>{8, 10})
                         != lists.end();
    report(2, "(t^4,t^10) and (t^8,t^10) certify and are enumerated over <4,5>",
           certified && listed);
}

TEST_CASE("criterion 3: the doubling construction")
{
    DoublingInstance inst = doubled_semigroup(sg({3, 4, 5}), 9);
    auto [ci, cj] = doubling_ulrich_pair(inst);
    bool example_ok = inst.doubled.generators() == std::vector<long long>{6, 8, 9, 10}
                      && ci.ideal.min_generators() == std::vector<long long>{6, 9}
                      && ci.nu == 2
                      && cj.ideal.min_generators() == std::vector<long long>{6, 8, 10}
                      && cj.nu == 3;

    // scan: every base with v = e = n in {3, 4}, F(L) <= 15, admissible b
    long long scanned = 0, failures = 0;
    for (const NumericalSemigroup& l : semigroups_with_frobenius_at_most(15)) {
        long long n = l.embedding_dimension();
        if ((n != 3 && n != 4) || l.multiplicity() != n)
            continue;
        for (long long b : admissible_doubling_b(l, 2 * l.frobenius() + 20)) {
            ++scanned;
            try {
                doubling_ulrich_pair(doubled_semigroup(l, b));
            } catch (const construction_failure&) {
                ++failures;
            }
        }
    }
    std::printf("  (scanned %lld doubling instances)\n", scanned);
    report(3, "doubling yields the certified pair; the scan never fails",
           example_ok && scanned > 100 && failures == 0);
}

TEST_CASE("criterion 4: Ext ranks t and t^2-1 for every ideal from criteria 1-3")
{
    struct Fixture {
        std::vector<long long> h, i;
    };
    std::vector<Fixture> fixtures{{{3, 4, 5}, {3, 4, 5}},
                                  {{4, 5}, {4, 10}},
                                  {{4, 5}, {8, 10}},
                                  {{6, 8, 9, 10}, {6, 9}},
                                  {{6, 8, 9, 10}, {6, 8, 10}},
                                  {{8, 10, 12, 13, 14}, {8, 13}},
                                  {{8, 10, 12, 13, 14}, {8, 10, 12, 14}}};
    bool all = true;
    for (const Fixture& f : fixtures) {
        NumericalSemigroup h = sg(f.h);
        UlrichCertificate cert = is_ulrich(h, ideal_from_generators(h, f.i));
        REQUIRE(cert.ulrich());
        HomologicalProfile p = verify_homological_profile(h, cert);
        all = all && p.ext1_free && p.ext2_free && p.hom_dim_ok && p.bookkeeping_ok && p.pass;
    }
    // the quoted instance: I = m over <3,4,5> has hom dim 4 and ext2 rank 3
    NumericalSemigroup h345 = sg({3, 4, 5});
    HomologicalProfile p =
        verify_homological_profile(h345, is_ulrich(h345, maximal_ideal(h345)));
    all = all && p.hom_dim == 4 && p.ext2_length == 3;
    report(4, "Ext^1 free of rank t, Ext^2 free of rank t^2-1 via the exact sequence", all);
}

TEST_CASE("criterion 5: the type identity across the F <= 12 family")
{
    bool all = true;
    long long ideals = 0;
    for (const NumericalSemigroup& h : semigroups_with_frobenius_at_most(12)) {
        for (const UlrichCertificate& cert : enumerate_ulrich(h, 40)) {
            ++ideals;
            HomologicalProfile p = verify_homological_profile(h, cert);
            all = all && p.type_identity_ok && p.r_ring == cert.t * p.r_quotient
                  && p.rq_length == (cert.t + 1) * cert.colength && p.colon_ok;
        }
    }
    std::printf("  (%lld certified ideals)\n", ideals);
    report(5, "t r(R/I) = r(I/Q) = r(R), l(R/Q) = (t+1) l(R/I), Q:I = I everywhere",
           all && ideals > 0);
}

TEST_CASE("criterion 6: prime type forces Gorenstein quotients and nu = type + 1")
{
    bool all = true;
    long long checked = 0;
    for (const NumericalSemigroup& h : semigroups_with_frobenius_at_most(12)) {
        if (is_symmetric(h) || !is_almost_symmetric(h))
            continue;
        long long type = semigroup_type(h);
        bool prime = type >= 2;
        for (long long d = 2; d * d <= type; ++d)
            if (type % d == 0)
                prime = false;
        if (!prime)
            continue;
        for (const UlrichCertificate& cert : enumerate_ulrich(h, 40)) {
            ++checked;
            HomologicalProfile p = verify_homological_profile(h, cert);
            all = all && p.r_quotient == 1 && cert.nu == type + 1;
        }
    }
    std::printf("  (%lld ideals over prime-type semigroups)\n", checked);
    report(6, "socle dim 1 and nu = type + 1 over prime-type almost symmetric semigroups",
           all && checked > 0);
}

TEST_CASE("criterion 7: core containment over the almost symmetric family")
{
    bool all = true;
    long long checked = 0;
    for (const NumericalSemigroup& h : semigroups_with_frobenius_at_most(12)) {
        if (is_symmetric(h) || !is_almost_symmetric(h))
            continue;
        RelativeIdeal core = monomial_core(h);
        for (const UlrichCertificate& cert : enumerate_ulrich(h, 40)) {
            ++checked;
            all = all && is_subset(core, cert.ideal);
        }
    }
    bool exact_345 =
        monomial_core(sg({3, 4, 5})).min_generators() == std::vector<long long>{3, 4, 5};
    std::printf("  (%lld containments)\n", checked);
    report(7, "monomial core inside every Ulrich ideal; equals m over <3,4,5>",
           all && checked > 0 && exact_345);
}

TEST_CASE("criterion 8: property suites")
{
    // (a) both almost-symmetry criteria agree on every H with F <= 30
    // (is_almost_symmetric raises CriteriaDisagree otherwise)
    bool criteria_agree = true;
    long long family_size = 0;
    try {
        for (const NumericalSemigroup& h : semigroups_with_frobenius_at_most(30)) {
            ++family_size;
            is_almost_symmetric(h);
        }
    } catch (const error&) {
        criteria_agree = false;
    }
    std::printf("  (dual criteria agree on %lld semigroups)\n", family_size);

    // (b) enumeration matches the naive subset oracle at bound 20
    bool oracle_ok = true;
    for (auto gens : {std::vector<long long>{2, 3}, {3, 4, 5}, {4, 5}}) {
        NumericalSemigroup h = sg(gens);
        std::vector<std::vector<long long>> got;
        for (const UlrichCertificate& cert : enumerate_ulrich(h, 20))
            got.push_back(cert.ideal.min_generators());
        oracle_ok = oracle_ok && got == oracle::enumerate_ulrich_naive(h, 20);
    }

    // (c) window doubling changes nothing: rerun the full family suite at
    // factor 4 and compare the serialized reports byte for byte
    auto family = semigroups_with_frobenius_at_most(12);
    set_window_factor(2);
    json base = theorem_suite(family, 40);
    set_window_factor(4);
    json doubled = theorem_suite(family, 40);
    set_window_factor(2);
    bool window_stable = base.dump() == doubled.dump();
    bool family_passes = true;
    for (const auto& r : base)
        family_passes = family_passes && r.at("pass").get<bool>();

    report(8, "criteria agreement, subset-oracle agreement, window-doubling stability",
           criteria_agree && family_size == 130502 && oracle_ok && window_stable
               && family_passes);
}
