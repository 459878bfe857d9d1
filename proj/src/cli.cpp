#include "ulrich/cli.hpp"

#include "ulrich/config.hpp"
#include "ulrich/doubling.hpp"
#include "ulrich/engine.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/family.hpp"
#include "ulrich/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace ulrich {

namespace {

using nlohmann::json;

void emit(const json& doc, const CliConfig& config, std::ostream& out,
          const std::string& table_text)
{
    if (config.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << table_text;
}

std::string describe_certificate(const UlrichCertificate& cert)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < cert.ideal.min_generators().size(); ++i)
        os << (i ? "," : "") << cert.ideal.min_generators()[i];
    os << ")  " << (cert.ulrich() ? "Ulrich" : "NotUlrich(" + cert.reason + ")")
       << "  nu=" << cert.nu << " t=" << cert.t << " a=" << cert.reduction_degree
       << " l(R/I)=" << cert.colength;
    return os.str();
}

long long default_bound(const NumericalSemigroup& H)
{
    return std::max(2 * H.frobenius() + 2 * H.multiplicity(), H.multiplicity());
}

int cmd_info(const CliConfig& config, std::ostream& out)
{
    NumericalSemigroup H = NumericalSemigroup::from_generators(config.semigroup_gens);
    json doc = H;
    std::ostringstream table;
    table << "semigroup <";
    for (size_t i = 0; i < H.generators().size(); ++i)
        table << (i ? "," : "") << H.generators()[i];
    table << ">\n"
          << "  frobenius         " << H.frobenius() << "\n"
          << "  genus             " << H.genus() << "\n"
          << "  multiplicity      " << H.multiplicity() << "\n"
          << "  embedding dim     " << H.embedding_dimension() << "\n"
          << "  type              " << (H.is_full() ? std::string("-") : std::to_string(semigroup_type(H)))
          << "\n"
          << "  symmetric         " << (is_symmetric(H) ? "yes" : "no") << "\n"
          << "  almost symmetric  " << (is_almost_symmetric(H) ? "yes" : "no") << "\n";
    emit(doc, config, out, table.str());
    return 0;
}

int cmd_ideal(const CliConfig& config, std::ostream& out)
{
    NumericalSemigroup H = NumericalSemigroup::from_generators(config.semigroup_gens);
    UlrichCertificate cert = is_ulrich(H, ideal_from_generators(H, config.ideal_gens));
    json doc = cert;
    emit(doc, config, out, describe_certificate(cert) + "\n");
    return 0;
}

int cmd_enumerate(const CliConfig& config, std::ostream& out)
{
    NumericalSemigroup H = NumericalSemigroup::from_generators(config.semigroup_gens);
    long long bound = config.bound > 0 ? config.bound : default_bound(H);
    std::vector<UlrichCertificate> certs = enumerate_ulrich(H, bound);

    json doc{{"semigroup", H.generators()},
             {"bound", bound},
             {"completeness", "all Ulrich ideals with reduction degree <= bound"},
             {"certificates", certs}};
    std::ostringstream table;
    table << "bound " << bound << " (complete for reduction degree <= bound)\n";
    for (const UlrichCertificate& cert : certs)
        table << "  " << describe_certificate(cert) << "\n";
    table << certs.size() << " Ulrich ideal(s)\n";
    if (config.include_parameters) {
        std::vector<UlrichCertificate> params = enumerate_parameter_ideals(H, bound);
        doc["parameter_ideals"] = params;
        table << params.size() << " parameter ideal(s) reported separately\n";
    }
    emit(doc, config, out, table.str());
    return 0;
}

int cmd_verify(const CliConfig& config, std::ostream& out)
{
    NumericalSemigroup H = NumericalSemigroup::from_generators(config.semigroup_gens);
    UlrichCertificate cert = is_ulrich(H, ideal_from_generators(H, config.ideal_gens));
    if (!cert.ulrich())
        raise(errc::not_ulrich_input,
              "verify needs an Ulrich ideal; the test said " + cert.reason);
    HomologicalProfile profile = verify_homological_profile(H, cert);

    VerificationReport report;
    report.check = "ulrich-profile";
    report.inputs = {{"semigroup", H.generators()}, {"ideal", cert.ideal.min_generators()}};
    report.measured = profile;
    report.pass = profile.pass;
    report.trace = "ext ranks and type identity for " + describe_certificate(cert);

    json doc = report;
    std::ostringstream table;
    table << describe_certificate(cert) << "\n"
          << "  colon Q:I = I      " << (profile.colon_ok ? "ok" : "FAIL") << "\n"
          << "  ext1 rank t        " << (profile.ext1_free ? "ok" : "FAIL") << " (l="
          << profile.ext1_length << ")\n"
          << "  hom dim t^2 l      " << (profile.hom_dim_ok ? "ok" : "FAIL") << " (dim="
          << profile.hom_dim << ")\n"
          << "  ext2 rank t^2-1    " << (profile.ext2_free ? "ok" : "FAIL") << " (l="
          << profile.ext2_length << ")\n"
          << "  length bookkeeping " << (profile.bookkeeping_ok ? "ok" : "FAIL") << "\n"
          << "  type identity      " << (profile.type_identity_ok ? "ok" : "FAIL") << " (r(R)="
          << profile.r_ring << ")\n"
          << (profile.pass ? "PASS" : "FAIL") << "\n";
    emit(doc, config, out, table.str());
    return profile.pass ? 0 : 1;
}

int cmd_suite(const CliConfig& config, std::ostream& out)
{
    std::vector<NumericalSemigroup> family =
        semigroups_with_frobenius_at_most(config.max_frobenius);
    long long bound = config.bound > 0 ? config.bound : 40;
    std::vector<VerificationReport> reports = theorem_suite(family, bound);
    bool all_pass = true;
    for (const VerificationReport& r : reports)
        all_pass = all_pass && r.pass;

    json doc{{"max_frobenius", config.max_frobenius},
             {"bound", bound},
             {"family_size", family.size()},
             {"reports", reports},
             {"all_pass", all_pass}};
    std::ostringstream table;
    table << "family: " << family.size() << " semigroups with F <= " << config.max_frobenius
          << ", bound " << bound << "\n";
    size_t failed = 0;
    for (const VerificationReport& r : reports) {
        if (!r.pass)
            ++failed;
        if (!r.pass || config.verbosity > 0)
            table << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.check << " on "
                  << r.inputs.dump() << "\n";
    }
    table << reports.size() << " reports, " << failed << " failed\n";
    emit(doc, config, out, table.str());
    return all_pass ? 0 : 1;
}

int cmd_construct_double(const CliConfig& config, std::ostream& out)
{
    NumericalSemigroup L = NumericalSemigroup::from_generators(config.semigroup_gens);
    DoublingInstance inst = doubled_semigroup(L, config.b);
    try {
        auto [ci, cj] = doubling_ulrich_pair(inst);
        json doc{{"base", L.generators()},
                 {"b", inst.b},
                 {"doubled", inst.doubled.generators()},
                 {"certificate_i", ci},
                 {"certificate_j", cj}};
        std::ostringstream table;
        table << "doubled semigroup: <";
        for (size_t i = 0; i < inst.doubled.generators().size(); ++i)
            table << (i ? "," : "") << inst.doubled.generators()[i];
        table << ">\n  I: " << describe_certificate(ci) << "\n  J: " << describe_certificate(cj)
              << "\n";
        emit(doc, config, out, table.str());
        return 0;
    } catch (const construction_failure& failure) {
        json doc{{"base", L.generators()},
                 {"b", inst.b},
                 {"doubled", inst.doubled.generators()},
                 {"failure", failure.what()},
                 {"certificate", failure.certificate()}};
        emit(doc, config, out,
             std::string("construction failed: ") + failure.what() + "\n  "
                 + describe_certificate(failure.certificate()) + "\n");
        return 1;
    }
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.subcommand == "info")
            return cmd_info(config, out);
        if (config.subcommand == "ideal")
            return cmd_ideal(config, out);
        if (config.subcommand == "enumerate")
            return cmd_enumerate(config, out);
        if (config.subcommand == "verify")
            return cmd_verify(config, out);
        if (config.subcommand == "suite")
            return cmd_suite(config, out);
        if (config.subcommand == "construct-double")
            return cmd_construct_double(config, out);
        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ulrich ideals of numerical semigroup rings: invariants, certificates, "
                 "exhaustive enumeration, verification suites"};
    app.require_subcommand(1);

    CliConfig config;
    std::string gens_text, ideal_text;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        cmd->add_flag("-v,--verbose", config.verbosity, "more table output");
    };

    CLI::App* info = app.add_subcommand("info", "semigroup invariants report");
    info->add_option("generators", gens_text, "comma-separated generators, e.g. 3,4,5")
        ->required();
    add_format(info);

    CLI::App* ideal = app.add_subcommand("ideal", "Ulrich certificate of a monomial ideal");
    ideal->add_option("generators", gens_text)->required();
    ideal->add_option("--ideal", ideal_text, "ideal generators, e.g. 4,10")->required();
    add_format(ideal);

    CLI::App* enumerate = app.add_subcommand("enumerate", "all Ulrich ideals within a bound");
    enumerate->add_option("generators", gens_text)->required();
    enumerate->add_option("--bound", config.bound, "completeness bound on the reduction degree")
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--include-parameters", config.include_parameters,
                        "also report parameter (principal) ideals");
    add_format(enumerate);

    CLI::App* verify = app.add_subcommand("verify", "homological profile of an Ulrich ideal");
    verify->add_option("generators", gens_text)->required();
    verify->add_option("--ideal", ideal_text)->required();
    add_format(verify);

    CLI::App* suite = app.add_subcommand("suite", "verification suite over a semigroup family");
    suite->add_option("--max-frobenius", config.max_frobenius, "family cutoff F(H) <= N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    suite->add_option("--bound", config.bound, "enumeration bound (default 40)")
        ->check(CLI::PositiveNumber);
    add_format(suite);

    CLI::App* construct = app.add_subcommand("construct", "certified constructions");
    CLI::App* dbl = construct->add_subcommand("double", "doubling of a base semigroup");
    dbl->add_option("generators", gens_text, "base semigroup generators")->required();
    dbl->add_option("--b", config.b, "the odd doubling degree")->required();
    add_format(dbl);
    construct->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (const char* factor_text = std::getenv("ULRICH_WINDOW_FACTOR")) {
            size_t pos = 0;
            int factor = std::stoi(factor_text, &pos);
            if (pos != std::string(factor_text).size())
                throw std::invalid_argument(factor_text);
            set_window_factor(factor);
        }
    } catch (const std::exception&) {
        err << "error: ULRICH_WINDOW_FACTOR must be an integer in [2, 64]\n";
        return 2;
    }

    if (info->parsed())
        config.subcommand = "info";
    else if (ideal->parsed())
        config.subcommand = "ideal";
    else if (enumerate->parsed())
        config.subcommand = "enumerate";
    else if (verify->parsed())
        config.subcommand = "verify";
    else if (suite->parsed())
        config.subcommand = "suite";
    else if (construct->parsed() && dbl->parsed())
        config.subcommand = "construct-double";

    try {
        if (!gens_text.empty())
            config.semigroup_gens = parse_generator_list(gens_text);
        if (!ideal_text.empty())
            config.ideal_gens = parse_generator_list(ideal_text);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    return run(config, out, err);
}

} // namespace ulrich
