#include "ceplane/errors.hpp"

namespace ceplane {

const char* to_string(error_category category) {
    switch (category) {
        case error_category::invalid_input: return "invalid-input";
        case error_category::invalid_distribution: return "invalid-distribution";
        case error_category::insufficient_data: return "insufficient-data";
        case error_category::format: return "format";
        case error_category::ordering: return "ordering";
        case error_category::empty_input: return "empty-input";
        case error_category::io: return "io";
        case error_category::internal: return "internal";
    }
    return "internal";
}

}  // namespace ceplane
