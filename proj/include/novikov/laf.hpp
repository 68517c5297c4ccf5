#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/certificate.hpp"
#include "novikov/error.hpp"
#include "novikov/extension.hpp"
#include "novikov/lie.hpp"
#include "novikov/matrix.hpp"
#include "novikov/product.hpp"

namespace novikov {

/// Syntax error in a LAF document, with 1-based line and column.
class LafError : public InputError {
public:
  LafError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

enum class LafTag { Lie, Product, Matrix, Extension, Lift, Certificate };

std::string tag_name(LafTag tag);
/// Tag from the header line of `text`; throws LafError.
LafTag detect_tag(std::string_view text);

/// A Lie document before validation.
struct LieDocument {
  std::vector<std::string> labels;
  StructureTensor bracket;
};

/// Parsing checks syntax and ranges only; semantic checks are left to the
/// validators (validate_lie, validate_extension, verify_certificate).
LieDocument parse_lie_document(std::string_view text);
/// parse_lie_document followed by validate_lie.
LieAlgebra parse_lie(std::string_view text);
AlgebraProduct parse_product(std::string_view text);
Matrix parse_matrix(std::string_view text);
ExtensionData parse_extension(std::string_view text);
LiftData parse_lift(std::string_view text);
Certificate parse_certificate(std::string_view text);

/// Canonical emission: fixed key order, entries sorted, zero entries omitted.
std::string emit_lie(const LieDocument& doc);
std::string emit_lie(const LieAlgebra& g);
std::string emit_product(const AlgebraProduct& p);
std::string emit_matrix(const Matrix& m);
std::string emit_extension(const ExtensionData& ext);
std::string emit_lift(const LiftData& lift, std::size_t dim_a);
std::string emit_certificate(const Certificate& c);

/// Whole-file helpers; throw InputError on I/O failure.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace novikov
