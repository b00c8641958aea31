#pragma once

#include <string>
#include <vector>

namespace curvess {

struct EmbeddedDocument {
    const char* name;
    const char* content;
};

/// Curve documents compiled into the library, sorted by file name.
const std::vector<EmbeddedDocument>& embedded_corpus();

} // namespace curvess
