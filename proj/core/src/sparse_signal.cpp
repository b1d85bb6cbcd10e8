#include "bgc/sparse_signal.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "bgc/errors.hpp"
#include "bgc/rng.hpp"

namespace bgc {

Eigen::VectorXd SparseSignal::to_dense() const {
  Eigen::VectorXd dense = Eigen::VectorXd::Zero(dimension);
  for (std::size_t i = 0; i < support.size(); ++i) {
    dense(support[i]) = values[i];
  }
  return dense;
}

SparseSignal generate_signal(int n, int k, Signing signing, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("signal dimension must be >= 0");
  if (k < 0 || k > n) throw std::invalid_argument("sparsity must satisfy 0 <= k <= n");

  SparseSignal signal;
  signal.dimension = n;
  signal.signing = signing;
  Xoshiro256 rng(seed);
  signal.support = sample_without_replacement(n, k, rng);
  signal.values.reserve(signal.support.size());
  for (std::size_t i = 0; i < signal.support.size(); ++i) {
    signal.values.push_back(signing == Signing::unsigned_one ? 1.0 : (rng.coin() ? 1.0 : -1.0));
  }
  return signal;
}

namespace {

std::pair<int, double> parse_signal_token(const std::string& token, int dimension,
                                          int line_number) {
  const auto colon = token.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
    throw ParseError("expected index:value, got '" + token + "'", line_number);
  }
  int index = 0;
  double value = 0.0;
  try {
    std::size_t parsed = 0;
    index = std::stoi(token.substr(0, colon), &parsed);
    if (parsed != colon) throw std::invalid_argument(token);
    const std::string value_text = token.substr(colon + 1);
    value = std::stod(value_text, &parsed);
    if (parsed != value_text.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw ParseError("cannot parse entry '" + token + "'", line_number);
  }
  if (index < 0 || index >= dimension) {
    throw ParseError("index " + std::to_string(index) + " out of range [0, " +
                         std::to_string(dimension) + ")",
                     line_number);
  }
  if (value == 0.0) throw ParseError("entry '" + token + "' has zero value", line_number);
  return {index, value};
}

}  // namespace

SparseSignal read_signal(std::istream& in, int dimension) {
  SparseSignal signal;
  signal.dimension = dimension;
  std::vector<char> used(static_cast<std::size_t>(dimension), 0);

  bool any_negative = false;
  std::vector<std::pair<int, double>> entries;
  std::string line, token;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line[0] == '#') continue;  // embedded manifest lines
    std::istringstream tokens(line);
    while (tokens >> token) {
      const auto [index, value] = parse_signal_token(token, dimension, line_number);
      if (used[static_cast<std::size_t>(index)]) {
        throw ParseError("duplicate index " + std::to_string(index), line_number);
      }
      used[static_cast<std::size_t>(index)] = 1;
      if (value < 0.0) any_negative = true;
      entries.emplace_back(index, value);
    }
  }

  std::sort(entries.begin(), entries.end());
  for (const auto& [index, value] : entries) {
    signal.support.push_back(index);
    signal.values.push_back(value);
  }
  signal.signing = any_negative ? Signing::signed_pm1 : Signing::unsigned_one;
  return signal;
}

SparseSignal read_signal(const std::filesystem::path& path, int dimension) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return read_signal(in, dimension);
}

void write_signal_entries(const Eigen::VectorXd& vector, std::ostream& out) {
  bool first = true;
  for (Eigen::Index i = 0; i < vector.size(); ++i) {
    if (vector(i) != 0.0) {
      char buffer[48];
      std::snprintf(buffer, sizeof buffer, "%lld:%.17g", static_cast<long long>(i), vector(i));
      out << (first ? "" : " ") << buffer;
      first = false;
    }
  }
  out << '\n';
}

}  // namespace bgc
