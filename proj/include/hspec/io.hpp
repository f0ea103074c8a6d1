#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

/// Parses the `tensor <k> <n>` text format (1-based sorted indices, values
/// as decimals or p/q, `#` comments). `source` prefixes error messages.
SymmetricTensor parse_tensor(std::string_view text, std::string_view source = "<string>");
/// Parses the `hypergraph <k> <n>` text format (1-based distinct vertices).
Hypergraph parse_hypergraph(std::string_view text, std::string_view source = "<string>");

/// One orbit per line with values printed to 17 significant digits, so
/// parse(serialize(T)) == T.
std::string serialize_tensor(const SymmetricTensor& t);
std::string serialize_hypergraph(const Hypergraph& g);

using Instance = std::variant<SymmetricTensor, Hypergraph>;

/// Reads a file and dispatches on its header keyword.
Instance load_instance(const std::string& path);
Instance parse_instance(std::string_view text, std::string_view source = "<string>");

}  // namespace hspec
