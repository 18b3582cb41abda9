#pragma once

#include <filesystem>
#include <string>

#include "posmap/hermitian.hpp"
#include "posmap/superop.hpp"
#include "posmap/synthesis.hpp"

namespace posmap {

// Matrix file schema: {"n": int, "entries": [[[re,im], ...], ...]} row-major.
// Hermiticity is validated on load (1e-12, with symmetrization).
std::string matrix_to_json(const HermitianMatrix& a);
HermitianMatrix matrix_from_json(const std::string& text);
void write_matrix(const std::filesystem::path& path, const HermitianMatrix& a);
HermitianMatrix read_matrix(const std::filesystem::path& path);

// Superoperator schema: {"src_dim": n, "dst_dim": k, "matrix": [[row-major
// reals]]} with k^2 rows of n^2 entries over the canonical bases.
std::string superop_to_json(const SuperOperator& s);
SuperOperator superop_from_json(const std::string& text);
void write_superop(const std::filesystem::path& path, const SuperOperator& s);
SuperOperator read_superop(const std::filesystem::path& path);

std::string cert_to_json(const ConstructionCert& cert);

}  // namespace posmap
