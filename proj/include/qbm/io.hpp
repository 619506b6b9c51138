#pragma once

#include <string>
#include <vector>

namespace qbm {

struct TargetDistribution;

/// 17-significant-digit decimal, the numeric wire format of every artifact.
std::string fmt17(double x);

std::string bitstring(uint64_t index, int n_sites);
uint64_t parse_bitstring(const std::string& bits);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Target tables serialize as "bitstring probability" lines in index order,
/// preceded by provenance comments.
std::string target_table(const TargetDistribution& target);
TargetDistribution read_target_table(const std::string& path);

}  // namespace qbm
