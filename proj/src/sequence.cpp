// Copyright 2026 The zerosum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zerosum/core/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <utility>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

void require_same_group(const Sequence& a, const Sequence& b) {
  if (!(a.group() == b.group())) {
    throw InvalidArgument("sequences live in different groups (" +
                          format_group(a.group()) + " vs " +
                          format_group(b.group()) + ")");
  }
}

}  // namespace

Sequence::Sequence(Group group)
    : group_(std::move(group)), mult_(group_.order(), 0) {}

Sequence Sequence::from_indices(Group group,
                                std::span<const std::size_t> terms) {
  Sequence s(std::move(group));
  for (const std::size_t t : terms) s.add(t);
  return s;
}

Sequence Sequence::from_elements(Group group, std::span<const Element> terms) {
  Sequence s(std::move(group));
  for (const Element& e : terms) s.add(s.group().index_of(e));
  return s;
}

std::uint64_t Sequence::multiplicity(const Element& e) const {
  return mult_[group_.index_of(e)];
}

std::vector<std::size_t> Sequence::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] > 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Sequence::terms() const {
  std::vector<std::size_t> out;
  out.reserve(length_);
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    out.insert(out.end(), mult_[i], i);
  }
  return out;
}

void Sequence::add(std::size_t index, std::uint64_t count) {
  if (index >= mult_.size()) throw InvalidArgument("term outside group");
  if (mult_[index] + count > std::numeric_limits<std::uint32_t>::max()) {
    throw CapExceeded("multiplicity overflow");
  }
  mult_[index] += static_cast<std::uint32_t>(count);
  length_ += count;
}

void Sequence::remove(std::size_t index, std::uint64_t count) {
  if (index >= mult_.size() || mult_[index] < count) {
    throw PreconditionError("cannot remove a term the sequence does not have");
  }
  mult_[index] -= static_cast<std::uint32_t>(count);
  length_ -= count;
}

bool canonical_less(const Sequence& a, const Sequence& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.terms() < b.terms();
}

Sequence parse_sequence(const Group& g, std::string_view text) {
  Sequence s(g);
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  // Split on whitespace outside parentheses so "(1, 0)" stays one term.
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    int depth = 0;
    while (pos < text.size() &&
           (depth > 0 || !std::isspace(static_cast<unsigned char>(text[pos])))) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.empty()) throw ParseError("empty sequence text (use \"empty\")");
  if (tokens.size() == 1) {
    std::string lower(tokens.front());
    std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
      return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    });
    if (lower == "empty") return s;
  }
  for (const std::string_view token : tokens) {
    std::string_view element_text = token;
    std::uint64_t count = 1;
    const std::size_t caret = token.rfind('^');
    if (caret != std::string_view::npos) {
      element_text = token.substr(0, caret);
      const std::string_view exponent = token.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(
          exponent.data(), exponent.data() + exponent.size(), count);
      if (exponent.empty() || ec != std::errc() ||
          ptr != exponent.data() + exponent.size() || count == 0) {
        throw ParseError("malformed term '" + std::string(token) +
                         "': exponent must be a positive integer");
      }
    }
    s.add(g.index_of(parse_element(g, element_text)), count);
  }
  return s;
}

std::string format_sequence(const Sequence& s) {
  if (s.empty()) return "empty";
  std::string out;
  for (const std::size_t i : s.support()) {
    if (!out.empty()) out += ' ';
    out += format_index(s.group(), i);
    if (s.multiplicity(i) > 1) out += '^' + std::to_string(s.multiplicity(i));
  }
  return out;
}

std::size_t seq_sum_index(const Sequence& s) {
  std::size_t total = 0;
  for (const std::size_t i : s.support()) {
    total = s.group().add(total, s.group().scale(
                                     static_cast<std::int64_t>(s.multiplicity(i)), i));
  }
  return total;
}

Element seq_sum(const Sequence& s) {
  return s.group().element_at(seq_sum_index(s));
}

bool divides(const Sequence& t, const Sequence& s) {
  require_same_group(t, s);
  for (std::size_t i = 0; i < s.group().order(); ++i) {
    if (t.multiplicity(i) > s.multiplicity(i)) return false;
  }
  return true;
}

Sequence seq_gcd(std::span<const Sequence> sequences) {
  if (sequences.empty()) throw InvalidArgument("gcd of no sequences");
  Sequence out = sequences.front();
  for (const Sequence& s : sequences.subspan(1)) {
    require_same_group(out, s);
    for (std::size_t i = 0; i < out.group().order(); ++i) {
      if (out.multiplicity(i) > s.multiplicity(i)) {
        out.remove(i, out.multiplicity(i) - s.multiplicity(i));
      }
    }
  }
  return out;
}

Sequence seq_gcd(const Sequence& a, const Sequence& b) {
  const Sequence pair[] = {a, b};
  return seq_gcd(pair);
}

Sequence seq_mul(const Sequence& a, const Sequence& b) {
  require_same_group(a, b);
  Sequence out = a;
  for (const std::size_t i : b.support()) out.add(i, b.multiplicity(i));
  return out;
}

Sequence seq_div(const Sequence& s, const Sequence& t) {
  require_same_group(s, t);
  if (!divides(t, s)) {
    throw PreconditionError("'" + format_sequence(t) + "' does not divide '" +
                            format_sequence(s) + "'");
  }
  Sequence out = s;
  for (const std::size_t i : t.support()) out.remove(i, t.multiplicity(i));
  return out;
}

Sequence seq_neg(const Sequence& s) {
  Sequence out(s.group());
  for (const std::size_t i : s.support()) {
    out.add(s.group().neg(i), s.multiplicity(i));
  }
  return out;
}

Sequence remove_term(const Sequence& s, std::size_t index) {
  Sequence out = s;
  out.remove(index);
  return out;
}

BigInt multichoose(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(n + k - 1, k)
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - 1 + i;
    result /= i;
  }
  return result;
}

MultisetStream::MultisetStream(Group group, std::size_t length,
                               bool exclude_zero)
    : group_(std::move(group)), length_(length) {
  for (std::size_t i = exclude_zero ? 1 : 0; i < group_.order(); ++i) {
    allowed_.push_back(i);
  }
  reset();
}

void MultisetStream::reset() {
  positions_.assign(length_, 0);
  terms_.clear();
  started_ = false;
  done_ = length_ > 0 && allowed_.empty();
}

bool MultisetStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // Rightmost position that can still grow; everything after it restarts
    // at the same value to keep the list non-decreasing.
    std::size_t i = length_;
    while (i > 0 && positions_[i - 1] + 1 == allowed_.size()) --i;
    if (i == 0) {
      done_ = true;
      terms_.clear();
      return false;
    }
    const std::size_t value = positions_[i - 1] + 1;
    for (std::size_t j = i - 1; j < length_; ++j) positions_[j] = value;
  }
  terms_.resize(length_);
  for (std::size_t j = 0; j < length_; ++j) terms_[j] = allowed_[positions_[j]];
  if (length_ == 0) {
    // The single empty multiset; the next call ends the stream.
    done_ = true;
  }
  return true;
}

Sequence MultisetStream::current() const {
  return Sequence::from_indices(group_, terms_);
}

BigInt MultisetStream::total() const {
  return multichoose(allowed_.size(), length_);
}

std::vector<Sequence> iterate_multisets(const Group& g, std::size_t length,
                                        bool exclude_zero) {
  std::vector<Sequence> out;
  MultisetStream stream(g, length, exclude_zero);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

}  // namespace zerosum
