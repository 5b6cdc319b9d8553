#pragma once

// Pieces shared by the command-line front end and the acceptance runner.

#include "grassmann.hpp"

#include <sstream>
#include <string>

namespace grassmann::cli {

/// Family produced by one of the named constructions.
inline SubspaceFamily construct_family(const std::string& method, const Field& field, std::size_t n, std::size_t k) {
    if (method == "spread") return resolving_from_spread(field, n, k);
    if (method == "partition") return resolving_from_partition(field, n, k);
    if (method == "greedy") return resolving_greedy_rank(field, n, k);
    throw InvalidArgs("unknown construction '" + method + "' (expected spread, partition or greedy)");
}

/// Exact bytes `construct` writes for an instance.
inline std::string construct_output(const std::string& method, int q, std::size_t n, std::size_t k) {
    const auto field = field_new(q);
    const auto family = construct_family(method, field, n, k);
    std::ostringstream os;
    os << "# construction " << method << '\n';
    write_family(os, field, n, k, family);
    return os.str();
}

} // namespace grassmann::cli
