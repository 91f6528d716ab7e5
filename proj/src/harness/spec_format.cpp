// Copyright 2026 The Authors.
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

#include <bit>
#include <charconv>
#include <sstream>

#include "matroidsum/harness.hpp"

namespace matroidsum::harness {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view whole) : text_(text), whole_(whole) {}

  bool done() const { return text_.empty(); }
  bool peek(char c) const { return !text_.empty() && text_.front() == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    text_.remove_prefix(1);
  }

  long number() {
    long value = 0;
    const auto* begin = text_.data();
    const auto [ptr, ec] = std::from_chars(begin, begin + text_.size(), value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    text_.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return value;
  }

  unsigned count() {
    const long v = number();
    if (v < 0 || v > 1'000'000) fail("count out of range");
    return static_cast<unsigned>(v);
  }

  // Comma-separated numbers up to the closing bracket, which is consumed.
  std::vector<long> list(char close) {
    std::vector<long> out;
    if (peek(close)) {
      expect(close);
      return out;
    }
    for (;;) {
      out.push_back(number());
      if (peek(close)) break;
      expect(',');
    }
    expect(close);
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("matroid spec '" + std::string(whole_) + "': " + what + " at '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::string_view whole_;
};

}  // namespace

Matroid parse_matroid_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ConfigError("matroid spec '" + std::string(spec) + "': missing kind");
  const auto kind = spec.substr(0, colon);
  Cursor in(spec.substr(colon + 1), spec);

  try {
    if (kind == "uniform") {
      const unsigned m = in.count();
      in.expect(':');
      const unsigned r = in.count();
      if (!in.done()) in.fail("trailing input");
      return Matroid::uniform(m, r);
    }
    if (kind == "sum") {
      unsigned v[4];
      for (int i = 0; i < 4; ++i) {
        if (i > 0) in.expect(':');
        v[i] = in.count();
      }
      if (!in.done()) in.fail("trailing input");
      return Matroid::direct_sum(Matroid::uniform(v[0], v[1]), Matroid::uniform(v[2], v[3]));
    }
    if (kind == "gf") {
      const unsigned p = in.count();
      in.expect(':');
      std::vector<std::vector<long>> columns;
      while (!in.done()) {
        in.expect('(');
        columns.push_back(in.list(')'));
      }
      return Matroid::from_matrix_gf_p(p, columns);
    }
    if (kind == "bases") {
      const unsigned m = in.count();
      in.expect(':');
      std::vector<ElementSet> bases;
      while (!in.done()) {
        in.expect('{');
        std::vector<unsigned> elements;
        for (auto e : in.list('}')) {
          if (e < 0) in.fail("negative element");
          elements.push_back(static_cast<unsigned>(e));
        }
        bases.push_back(ElementSet::from_elements(m, elements));
      }
      return Matroid::from_bases(m, bases);
    }
  } catch (const AxiomError&) {
    throw;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("matroid spec '" + std::string(spec) + "': " + e.what());
  }
  throw ConfigError("matroid spec '" + std::string(spec) + "': unknown kind '" + std::string(kind) + "'");
}

std::string uniform_spec(unsigned ground_size, unsigned rank) {
  return "uniform:" + std::to_string(ground_size) + ":" + std::to_string(rank);
}

std::string sum_spec(unsigned m1, unsigned r1, unsigned m2, unsigned r2) {
  return "sum:" + std::to_string(m1) + ":" + std::to_string(r1) + ":" + std::to_string(m2) + ":" + std::to_string(r2);
}

std::string matrix_spec(unsigned p, const std::vector<std::vector<long>>& columns) {
  std::ostringstream os;
  os << "gf:" << p << ':';
  for (const auto& c : columns) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::string bases_spec(unsigned ground_size, std::span<const Mask> bases) {
  std::ostringstream os;
  os << "bases:" << ground_size << ':';
  for (auto b : bases) {
    os << '{';
    bool first = true;
    for (unsigned bits = b; bits != 0; bits &= bits - 1) {
      os << (first ? "" : ",") << std::countr_zero(bits);
      first = false;
    }
    os << '}';
  }
  return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t SampleRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("SampleRng::below: zero bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::string canonical_text(std::string_view matroid_spec, unsigned modulus, std::span<const unsigned> weights) {
  std::string out(matroid_spec);
  out += "|Z" + std::to_string(modulus) + "|w=";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights[i]);
  }
  return out;
}

std::string instance_id(std::string_view matroid_spec, unsigned modulus, std::span<const unsigned> weights) {
  static constexpr char kHex[] = "0123456789abcdef";
  auto h = fnv1a64(canonical_text(matroid_spec, modulus, weights));
  std::string id(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) id[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return id;
}

InstanceDescriptor make_descriptor(std::string matroid_spec, unsigned modulus, std::vector<unsigned> weights) {
  auto id = instance_id(matroid_spec, modulus, weights);
  return {std::move(id), std::move(matroid_spec), modulus, std::move(weights)};
}

}  // namespace matroidsum::harness
