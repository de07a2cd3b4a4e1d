#pragma once

#include <filesystem>
#include <string>

#include "upen/types.hpp"

namespace upen {

/// Doubles are printed with %.17g so round trips are bit exact.
std::string format_double(double v);

void write_vector_csv(const Vector& v, const std::filesystem::path& path);
void write_matrix_csv(const Matrix& m, const std::filesystem::path& path);

Vector read_vector_csv(const std::filesystem::path& path);
Matrix read_matrix_csv(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace upen
