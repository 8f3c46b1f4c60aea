#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "elw/models.hpp"

namespace elw {

// Malformed model file. where() is a byte offset for syntax errors or a JSON
// pointer for schema errors.
class ModelFileError : public std::runtime_error {
 public:
  ModelFileError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Canonical text: one top-level key per line, compact values, fixed key order.
std::string model_to_json(const Model& m);

// Strict reader. Unknown or missing keys, out-of-range elements and explicit
// operation tables that disagree with the order are rejected. The model's
// truth conditions are not checked here.
Model model_from_json(std::string_view text);

}  // namespace elw
