#include "ulrich/errors.hpp"

namespace ulrich {

const char* errc_name(errc code)
{
    switch (code) {
    case errc::empty_generators: return "Empty";
    case errc::invalid_generator: return "InvalidGenerator";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_member: return "NotMember";
    case errc::full_semigroup: return "FullSemigroup";
    case errc::criteria_disagree: return "CriteriaDisagree";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::not_integral: return "NotIntegral";
    case errc::not_in_ideal: return "NotInIdeal";
    case errc::not_proper: return "NotProper";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::not_ulrich_input: return "NotUlrichInput";
    case errc::not_max_embedding_dim: return "NotMaxEmbeddingDim";
    case errc::even_b: return "EvenB";
    case errc::b_not_in_base: return "BNotInL";
    case errc::b_too_small: return "BTooSmall";
    case errc::construction_failed: return "ConstructionFailed";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

error::error(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
{
}

void raise(errc code, const std::string& detail)
{
    throw error(code, detail);
}

} // namespace ulrich
