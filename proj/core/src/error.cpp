#include "ssna/error.hpp"

namespace ssna {

const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_id: return "DuplicateId";
        case errc::schema_error: return "SchemaError";
        case errc::empty_corpus: return "EmptyCorpus";
        case errc::empty_matrix: return "EmptyMatrix";
        case errc::not_enough_actors: return "NotEnoughActors";
        case errc::kind_error: return "KindError";
        case errc::range_error: return "RangeError";
        case errc::undefined_correlation: return "UndefinedCorrelation";
        case errc::rank_error: return "RankError";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::io_error: return "IoError";
        case errc::config_error: return "ConfigError";
        case errc::internal: return "InternalError";
    }
    return "InternalError";
}

int errc_exit_code(errc c) {
    switch (c) {
        case errc::duplicate_id:
        case errc::schema_error:
        case errc::empty_corpus:
        case errc::empty_matrix:
        case errc::io_error:
        case errc::config_error:
            return 2;
        case errc::not_enough_actors:
        case errc::kind_error:
        case errc::range_error:
        case errc::undefined_correlation:
        case errc::rank_error:
        case errc::degenerate_input:
            return 3;
        case errc::internal:
            return 4;
    }
    return 4;
}

}  // namespace ssna
