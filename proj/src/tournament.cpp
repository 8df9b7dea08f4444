#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace tourlab {

namespace {

void check_order(int n) {
  if (n > kMaxVertices) {
    throw CapacityError("tournament order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxVertices) + " vertices");
  }
  if (n < 2) throw std::invalid_argument("a tournament needs at least 2 vertices");
}

}  // namespace

RowValidation validate_rows(int n, std::span<const std::uint32_t> rows) {
  RowValidation r;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.issues.push_back(std::move(msg));
  };
  if (n < 2 || n > kMaxVertices) {
    fail("order " + std::to_string(n) + " outside [2, " + std::to_string(kMaxVertices) + "]");
    return r;
  }
  if (static_cast<int>(rows.size()) < n) {
    fail("fewer rows than vertices");
    return r;
  }
  const VertexSet full = full_set(n);
  for (int u = 0; u < n; ++u) {
    if (rows[static_cast<std::size_t>(u)] & ~full) {
      fail("row " + std::to_string(u) + " has bits beyond vertex " + std::to_string(n - 1));
    }
    if (rows[static_cast<std::size_t>(u)] & bit(u)) {
      fail("row " + std::to_string(u) + " has a self-loop");
    }
  }
  if (!r.ok) return r;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool uv = (rows[static_cast<std::size_t>(u)] >> v) & 1u;
      bool vu = (rows[static_cast<std::size_t>(v)] >> u) & 1u;
      if (uv && vu) {
        fail("both " + std::to_string(u) + "->" + std::to_string(v) + " and " +
             std::to_string(v) + "->" + std::to_string(u) + " present");
      } else if (!uv && !vu) {
        fail("pair {" + std::to_string(u) + ", " + std::to_string(v) + "} is unoriented");
      }
    }
  }
  return r;
}

Tournament Tournament::from_out_rows(int n, std::span<const std::uint32_t> rows) {
  check_order(n);
  RowValidation v = validate_rows(n, rows);
  if (!v.ok) {
    std::string joined = "invalid tournament rows:";
    for (const std::string& issue : v.issues) joined += " " + issue + ";";
    throw std::invalid_argument(joined);
  }
  Tournament t;
  t.n_ = n;
  std::copy_n(rows.begin(), n, t.out_.begin());
  return t;
}

Tournament Tournament::from_pair_bits(int n, std::uint64_t bits) {
  check_order(n);
  if (n * (n - 1) / 2 > 64) {
    throw std::invalid_argument("pair-bit encoding only covers n <= 11");
  }
  Tournament t;
  t.n_ = n;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((bits >> k) & 1u) {
        t.out_[static_cast<std::size_t>(i)] |= bit(j);
      } else {
        t.out_[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  return t;
}

PairProfile Tournament::pair_profile(int u, int v) const {
  check_pair(u, v);
  PairProfile p;
  const VertexSet out_u = out_row(u), out_v = out_row(v);
  const VertexSet in_u = in_row(u), in_v = in_row(v);
  p.p2_uv = popcount(out_u & in_v);
  p.common_out = popcount(out_u & out_v);
  p.common_in = popcount(in_u & in_v);
  p.p2_vu = popcount(out_v & in_u);
  return p;
}

std::uint64_t Tournament::pair_bits() const {
  if (n_ * (n_ - 1) / 2 > 64) {
    throw std::invalid_argument("pair-bit encoding only covers n <= 11");
  }
  std::uint64_t bits = 0;
  int k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      if ((out_[static_cast<std::size_t>(i)] >> j) & 1u) bits |= std::uint64_t{1} << k;
    }
  }
  return bits;
}

DirectedPath DirectedPath::of(std::vector<int> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("a path needs at least 2 vertices");
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw CapacityError("path longer than the vertex cap");
  }
  VertexSet seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("path vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("path repeats a vertex");
    seen |= bit(v);
  }
  DirectedPath p;
  p.verts_ = std::move(vertices);
  return p;
}

VertexSet DirectedPath::vertex_mask() const {
  VertexSet m = 0;
  for (int v : verts_) m |= bit(v);
  return m;
}

bool DirectedPath::validate_in(const Tournament& t) const {
  for (int v : verts_) {
    if (v >= t.n()) return false;
  }
  for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
    if (!((t.out_row(verts_[i]) >> verts_[i + 1]) & 1u)) return false;
  }
  return true;
}

// --- TRN text codec ---------------------------------------------------

std::string encode_trn(const Tournament& t) {
  std::string out = std::to_string(t.n());
  out += '\n';
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) {
      out += ((t.out_row(i) >> j) & 1u) ? '1' : '0';
    }
  }
  out += '\n';
  return out;
}

namespace {

Tournament from_n_and_pairs(int n, const std::string& pairs) {
  check_order(n);
  const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (pairs.size() != want) {
    throw std::invalid_argument("pair string has " + std::to_string(pairs.size()) +
                                " characters, expected " + std::to_string(want));
  }
  std::array<std::uint32_t, kMaxVertices> rows{};
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      char c = pairs[k];
      if (c == '1') {
        rows[static_cast<std::size_t>(i)] |= bit(j);
      } else if (c == '0') {
        rows[static_cast<std::size_t>(j)] |= bit(i);
      } else {
        throw std::invalid_argument("pair string has a character other than 0/1");
      }
    }
  }
  return Tournament::from_out_rows(n, std::span<const std::uint32_t>(rows.data(),
                                                                     static_cast<std::size_t>(n)));
}

}  // namespace

Tournament decode_trn(const std::string& text) {
  std::istringstream in(text);
  long long n_raw = 0;
  if (!(in >> n_raw)) throw std::invalid_argument("TRN: missing order line");
  if (n_raw < 0 || n_raw > 1000) throw std::invalid_argument("TRN: implausible order");
  std::string pairs;
  if (!(in >> pairs)) throw std::invalid_argument("TRN: missing pair line");
  std::string rest;
  while (in >> rest) {
    throw std::invalid_argument("TRN: trailing non-whitespace content");
  }
  return from_n_and_pairs(static_cast<int>(n_raw), pairs);
}

std::string encode_json(const Tournament& t) {
  std::string trn = encode_trn(t);
  std::string pairs = trn.substr(trn.find('\n') + 1);
  pairs.pop_back();  // trailing LF
  nlohmann::json j;
  j["n"] = t.n();
  j["pairs"] = pairs;
  return j.dump();
}

Tournament decode_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs")) {
    throw std::invalid_argument("JSON mirror needs fields n and pairs");
  }
  if (!j["n"].is_number_integer() || !j["pairs"].is_string()) {
    throw std::invalid_argument("JSON mirror field types are n:int, pairs:string");
  }
  return from_n_and_pairs(j["n"].get<int>(), j["pairs"].get<std::string>());
}

}  // namespace tourlab
