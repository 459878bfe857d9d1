#include "ulrich/serialize.hpp"

#include "ulrich/errors.hpp"

#include <cctype>
#include <sstream>

namespace ulrich {

std::vector<long long> parse_generator_list(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            raise(errc::invalid_generator, "cannot parse '" + item + "' as an integer");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            raise(errc::invalid_generator, "cannot parse '" + item + "' as an integer");
        out.push_back(value);
    }
    if (out.empty())
        raise(errc::empty_generators, "expected a comma-separated list of integers");
    return out;
}

void to_json(nlohmann::json& j, const NumericalSemigroup& H)
{
    j = nlohmann::json{{"generators", H.generators()},
                       {"frobenius", H.frobenius()},
                       {"gaps", H.gaps()}};
    if (H.is_full()) {
        j["pf"] = nullptr;
        j["type"] = nullptr;
    } else {
        j["pf"] = pseudo_frobenius(H);
        j["type"] = semigroup_type(H);
    }
    j["symmetric"] = is_symmetric(H);
    j["almost_symmetric"] = is_almost_symmetric(H);
}

void from_json(const nlohmann::json& j, NumericalSemigroup& H)
{
    H = semigroup_from_json(j);
}

NumericalSemigroup semigroup_from_json(const nlohmann::json& j)
{
    return NumericalSemigroup::from_generators(j.at("generators").get<std::vector<long long>>());
}

void to_json(nlohmann::json& j, const RelativeIdeal& E)
{
    j = nlohmann::json{{"ambient", E.ambient().generators()},
                       {"generators", E.min_generators()}};
}

RelativeIdeal ideal_from_json(const nlohmann::json& j)
{
    NumericalSemigroup H =
        NumericalSemigroup::from_generators(j.at("ambient").get<std::vector<long long>>());
    return ideal_from_generators(H, j.at("generators").get<std::vector<long long>>());
}

void to_json(nlohmann::json& j, const UlrichCertificate& cert)
{
    j = nlohmann::json{{"ideal", cert.ideal},
                       {"reduction_degree", cert.reduction_degree},
                       {"nu", cert.nu},
                       {"t", cert.t},
                       {"colength", cert.colength},
                       {"stability_ok", cert.stability_ok},
                       {"freeness_ok", cert.freeness_ok},
                       {"is_parameter", cert.is_parameter},
                       {"verdict", cert.ulrich() ? "Ulrich" : "NotUlrich"}};
    if (!cert.ulrich())
        j["reason"] = cert.reason;
}

UlrichCertificate certificate_from_json(const nlohmann::json& j)
{
    UlrichCertificate cert{ideal_from_json(j.at("ideal")),
                           j.at("reduction_degree").get<long long>(),
                           j.at("nu").get<long long>(),
                           j.at("t").get<long long>(),
                           j.at("colength").get<long long>(),
                           j.at("stability_ok").get<bool>(),
                           j.at("freeness_ok").get<bool>(),
                           j.at("is_parameter").get<bool>(),
                           j.at("verdict").get<std::string>() == "Ulrich" ? Verdict::ulrich
                                                                          : Verdict::not_ulrich,
                           std::string()};
    if (j.contains("reason"))
        cert.reason = j.at("reason").get<std::string>();
    return cert;
}

void to_json(nlohmann::json& j, const HomologicalProfile& p)
{
    j = nlohmann::json{{"reduction_degree", p.reduction_degree},
                       {"quotient_length", p.quotient_length},
                       {"rq_length", p.rq_length},
                       {"colon_ok", p.colon_ok},
                       {"ext1_length", p.ext1_length},
                       {"ext1_free", p.ext1_free},
                       {"hom_dim", p.hom_dim},
                       {"hom_dim_ok", p.hom_dim_ok},
                       {"ext2_length", p.ext2_length},
                       {"ext2_free", p.ext2_free},
                       {"bookkeeping_ok", p.bookkeeping_ok},
                       {"rq_length_ok", p.rq_length_ok},
                       {"r_ring", p.r_ring},
                       {"r_quotient", p.r_quotient},
                       {"r_iq", p.r_iq},
                       {"type_identity_ok", p.type_identity_ok},
                       {"pass", p.pass}};
}

void from_json(const nlohmann::json& j, HomologicalProfile& p)
{
    p.reduction_degree = j.at("reduction_degree").get<long long>();
    p.quotient_length = j.at("quotient_length").get<long long>();
    p.rq_length = j.at("rq_length").get<long long>();
    p.colon_ok = j.at("colon_ok").get<bool>();
    p.ext1_length = j.at("ext1_length").get<long long>();
    p.ext1_free = j.at("ext1_free").get<bool>();
    p.hom_dim = j.at("hom_dim").get<long long>();
    p.hom_dim_ok = j.at("hom_dim_ok").get<bool>();
    p.ext2_length = j.at("ext2_length").get<long long>();
    p.ext2_free = j.at("ext2_free").get<bool>();
    p.bookkeeping_ok = j.at("bookkeeping_ok").get<bool>();
    p.rq_length_ok = j.at("rq_length_ok").get<bool>();
    p.r_ring = j.at("r_ring").get<long long>();
    p.r_quotient = j.at("r_quotient").get<long long>();
    p.r_iq = j.at("r_iq").get<long long>();
    p.type_identity_ok = j.at("type_identity_ok").get<bool>();
    p.pass = j.at("pass").get<bool>();
}

void to_json(nlohmann::json& j, const VerificationReport& r)
{
    j = nlohmann::json{{"check", r.check},
                       {"inputs", r.inputs},
                       {"measured", r.measured},
                       {"pass", r.pass},
                       {"trace", r.trace}};
}

void from_json(const nlohmann::json& j, VerificationReport& r)
{
    r.check = j.at("check").get<std::string>();
    r.inputs = j.at("inputs");
    r.measured = j.at("measured");
    r.pass = j.at("pass").get<bool>();
    r.trace = j.at("trace").get<std::string>();
}

void to_json(nlohmann::json& j, const FiniteLengthModule& M)
{
    j = nlohmann::json{{"dimension", M.dimension()}};
    if (M.has_labels())
        j["basis_labels"] = M.basis_labels();
    nlohmann::json actions = nlohmann::json::array();
    for (size_t g = 0; g < M.ambient().generators().size(); ++g) {
        RatMat a = M.action_matrix(g);
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < a.cols(); ++k)
                row.push_back(a.at(i, k).get_str());
            rows.push_back(std::move(row));
        }
        actions.push_back(nlohmann::json{{"generator", M.ambient().generators()[g]},
                                         {"matrix", std::move(rows)}});
    }
    j["actions"] = std::move(actions);
}

} // namespace ulrich
