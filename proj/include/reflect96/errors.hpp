#pragma once

#include <stdexcept>
#include <string>

namespace reflect96 {

// One exception type per failure category so callers can react precisely.
struct arithmetic_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct dimension_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct closure_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct alignment_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct construction_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct not_a_character : std::runtime_error { using std::runtime_error::runtime_error; };
struct parse_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct resource_error : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace reflect96
