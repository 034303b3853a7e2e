#include "naklab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace naklab {

GeneralizedPartition::GeneralizedPartition(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p == 0) throw std::invalid_argument("generalized partition parts must be nonzero");
    ++mult_[p];
  }
}

GeneralizedPartition GeneralizedPartition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "-" || token == "+") throw InputError("malformed partition '" + std::string(text) + "'");
    int v = std::stoi(token);
    if (v == 0) throw InputError("partition parts must be nonzero");
    parts.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && token.empty())) {
      token.push_back(c);
    } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else {
      throw InputError("malformed partition '" + std::string(text) + "'");
    }
  }
  flush();
  return GeneralizedPartition(parts);
}

int GeneralizedPartition::length() const {
  int l = 0;
  for (const auto& [p, m] : mult_) l += m;
  return l;
}

int GeneralizedPartition::size() const {
  int s = 0;
  for (const auto& [p, m] : mult_) s += p * m;
  return s;
}

int GeneralizedPartition::square_sum() const {
  int s = 0;
  for (const auto& [p, m] : mult_) s += p * p * m;
  return s;
}

Rational GeneralizedPartition::multiplicity_factorial() const {
  Rational r(1);
  for (const auto& [p, m] : mult_) r *= factorial(m);
  return r;
}

int GeneralizedPartition::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<int> GeneralizedPartition::ordered_parts() const {
  std::vector<int> out;
  for (const auto& [p, m] : mult_) out.insert(out.end(), m, p);
  return out;
}

std::vector<int> GeneralizedPartition::positive_parts() const {
  std::vector<int> out;
  for (const auto& [p, m] : mult_)
    if (p > 0) out.insert(out.end(), m, p);
  return out;
}

std::vector<int> GeneralizedPartition::creation_moduli() const {
  std::vector<int> out;
  for (const auto& [p, m] : mult_)
    if (p < 0) out.insert(out.end(), m, -p);
  return out;
}

int GeneralizedPartition::positive_sum() const {
  int s = 0;
  for (const auto& [p, m] : mult_)
    if (p > 0) s += p * m;
  return s;
}

std::string GeneralizedPartition::str() const {
  std::string s = "(";
  bool first = true;
  for (int p : ordered_parts()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

namespace {

void gen_partitions(int remaining, int parts_left, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // Each remaining part is at least 1 and at most max_part.
  if (remaining < parts_left || remaining > parts_left * max_part) return;
  for (int p = std::min(max_part, remaining - (parts_left - 1)); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, parts_left - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_with_length(int n, int length) {
  std::vector<std::vector<int>> out;
  if (n < 0 || length < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, length, std::max(n, 1), cur, out);
  return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  for (int l = (n == 0 ? 0 : 1); l <= n; ++l) {
    auto part = partitions_with_length(n, l);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<GeneralizedPartition> generalized_partitions(int length, int size, int max_positive_sum) {
  std::vector<GeneralizedPartition> out;
  if (length < 0) return out;
  for (int positive_count = 0; positive_count <= length; ++positive_count) {
    const int negative_count = length - positive_count;
    for (int pos_sum = positive_count; pos_sum <= max_positive_sum || (positive_count == 0 && pos_sum == 0);
         ++pos_sum) {
      if (positive_count == 0 && pos_sum > 0) break;
      const int neg_sum = pos_sum - size;
      if (neg_sum < 0) continue;
      auto positives = partitions_with_length(pos_sum, positive_count);
      auto negatives = partitions_with_length(neg_sum, negative_count);
      for (const auto& p : positives)
        for (const auto& q : negatives) {
          std::vector<int> parts = p;
          for (int v : q) parts.push_back(-v);
          out.emplace_back(parts);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace naklab
