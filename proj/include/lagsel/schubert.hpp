#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/subspace.hpp"

namespace lagsel {

/// Jump indices of a subspace W with respect to a flag: the 1-based steps j
/// with V_j not contained in V_{j-1} + W. They label the Schubert cell of W.
struct JumpSet {
  std::size_t m = 0;
  std::vector<std::size_t> indices;

  friend bool operator==(const JumpSet&, const JumpSet&) = default;
};

/// The chain p^0 = V > p^1 > ... > p^d of the inductive filtration together
/// with its 1-based index sequences (i_1..i_d) and (j_1..j_d).
struct FiltrationTrace {
  std::vector<Subspace> chain;
  std::vector<std::size_t> i_seq;
  std::vector<std::size_t> j_seq;

  std::size_t d() const noexcept { return chain.size() - 1; }
  const Subspace& last() const { return chain.back(); }
};

inline JumpSet jump_indices(const Subspace& w, const Flag& flag) {
  detail::require_dim(flag.dim(), w.ambient_dim(), "jump indices");
  JumpSet out{flag.dim(), {}};
  Subspace acc = w;  // V_{j-1} + W
  for (std::size_t j = 1; j <= flag.dim(); ++j) {
    const Vector v = flag.column(j - 1);
    if (!acc.contains(v)) {
      out.indices.push_back(j);
      acc = sum(acc, Subspace::span(flag.dim(), {v}));
    }
  }
  return out;
}

/// Runs the flag-driven filtration until the current subspace is isotropic.
/// Non-isotropy of V_i cap p^k against p^k is tested as b_perp(B, p^k) not
/// containing V_i cap p^k.
inline FiltrationTrace filtration(const SkewForm& b, const Flag& flag) {
  detail::require_dim(b.dim(), flag.dim(), "filtration");
  const std::size_t m = b.dim();
  FiltrationTrace trace;
  trace.chain.push_back(Subspace::full(m));
  while (!is_isotropic(b, trace.last())) {
    if (trace.d() >= m) {
      throw CheckFailed("filtration did not terminate within " + std::to_string(m) + " steps");
    }
    const Subspace current = trace.last();
    const Subspace current_perp = b_perp(b, current);

    std::size_t i = 0;
    while (i <= m && contains(current_perp, intersect(flag.step(i), current))) {
      ++i;
    }
    if (i > m) {
      throw CheckFailed("filtration: no flag step meets the non-isotropic part");
    }
    Subspace next = intersect(b_perp(b, intersect(flag.step(i), current)), current);

    std::size_t j = 0;
    while (j <= m && contains(next, intersect(flag.step(j), current))) {
      ++j;
    }
    if (j > m) {
      throw CheckFailed("filtration: step did not shrink the subspace");
    }
    trace.i_seq.push_back(i);
    trace.j_seq.push_back(j);
    trace.chain.push_back(std::move(next));
  }
  return trace;
}

/// Lagrangian cell label of the Vergne selection.
inline JumpSet selection_cell(const SkewForm& b, const Flag& flag) {
  return jump_indices(vergne_select(b, flag), flag);
}

/// The signature vector of the stratum whose Vergne selections lie in the
/// Schubert cell labelled by `e`. With r_1 < ... < r_{m-d} the complement of e
/// and r_{m-d+1} = m + 1: k_j = j below r_1 and k_j = 2l - j on [r_l, r_{l+1}).
inline SignatureVector cell_to_signature(const JumpSet& e) {
  const std::size_t m = e.m;
  std::vector<bool> jumps(m + 1, false);
  for (std::size_t idx = 0; idx < e.indices.size(); ++idx) {
    const std::size_t j = e.indices[idx];
    if (j < 1 || j > m) {
      throw InvalidCell("jump index " + std::to_string(j) + " out of range 1.." + std::to_string(m));
    }
    if (idx > 0 && e.indices[idx - 1] >= j) {
      throw InvalidCell("jump indices must be strictly increasing");
    }
    jumps[j] = true;
  }
  std::vector<std::size_t> k(m);
  long level = 0;  // l: number of r's <= j
  for (std::size_t j = 1; j <= m; ++j) {
    if (!jumps[j]) {
      ++level;
    }
    const long kj = level == 0 ? static_cast<long>(j) : 2 * level - static_cast<long>(j);
    if (kj < 0 || kj > static_cast<long>(j)) {
      throw InvalidCell("jump set yields k_" + std::to_string(j) + " = " + std::to_string(kj) +
                        ", outside [0, " + std::to_string(j) + "]");
    }
    k[j - 1] = static_cast<std::size_t>(kj);
  }
  return SignatureVector(std::move(k));
}

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct LemmaReport {
  std::vector<CheckOutcome> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
  }
  const CheckOutcome* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) {
        return &c;
      }
    }
    return nullptr;
  }
};

namespace detail {

inline std::string format_indices(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << '}';
  return os.str();
}

class ReportBuilder {
 public:
  void check(const std::string& name, bool ok, const std::string& witness = {}) {
    auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                           [&](const CheckOutcome& c) { return c.name == name; });
    if (it == report_.checks.end()) {
      report_.checks.push_back({name, true, {}});
      it = report_.checks.end() - 1;
    }
    if (!ok && it->passed) {
      it->passed = false;
      it->witness = witness;
    }
  }
  LemmaReport take() { return std::move(report_); }

 private:
  LemmaReport report_;
};

}  // namespace detail

/// Runs the filtration and the Vergne selection for (B, F) and checks every
/// structural property the construction is known to satisfy. A failed check
/// carries a witness; since the properties are theorems, any failure is a bug.
inline LemmaReport verify_filtration_lemmas(const SkewForm& b, const Flag& flag) {
  using detail::format_indices;
  detail::ReportBuilder rb;
  const std::size_t m = b.dim();
  const FiltrationTrace trace = filtration(b, flag);
  const Subspace p = vergne_select(b, flag);
  const Subspace radical = null_space(b);
  const std::size_t d = trace.d();

  for (std::size_t k = 0; k < d; ++k) {
    const Subspace& pk = trace.chain[k];
    const Subspace& pk1 = trace.chain[k + 1];
    const std::string at = "step k=" + std::to_string(k);
    const Subspace vi_pk = intersect(flag.step(trace.i_seq[k]), pk);
    const Subspace vj_pk = intersect(flag.step(trace.j_seq[k]), pk);

    rb.check("step has codimension one", contains(pk, pk1) && pk.dim() == pk1.dim() + 1, at);
    rb.check("p^(k+1) + (V_j cap p^k) = p^k", sum(pk1, vj_pk) == pk, at);
    rb.check("V_i cap p^k inside p^(k+1)", contains(pk1, vi_pk), at);
    rb.check("V_i cap p^k orthogonal to p^(k+1)", contains(b_perp(b, vi_pk), pk1), at);
    rb.check("radicals increase",
             contains(intersect(b_perp(b, pk1), pk1), intersect(b_perp(b, pk), pk)), at);

    const std::size_t i = trace.i_seq[k];
    const std::size_t j = trace.j_seq[k];
    rb.check("index minimality",
             contains(b_perp(b, pk), intersect(flag.step(i - 1), pk)) &&
                 contains(pk1, intersect(flag.step(j - 1), pk)),
             at);
    rb.check("i_k < j_k", i < j, at + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (k + 1 < d) {
      rb.check("i_k < i_(k+1)", i < trace.i_seq[k + 1], at);
    }
  }

  rb.check("stops at first isotropic step",
           is_isotropic(b, trace.last()) && (d == 0 || !is_isotropic(b, trace.chain[d - 1])));
  rb.check("p^d = p(B)", trace.last() == p, "d=" + std::to_string(d));
  rb.check("d = (m - dim N)/2", 2 * d + radical.dim() == m,
           "d=" + std::to_string(d) + " dim N=" + std::to_string(radical.dim()));

  const JumpSet jump_n = jump_indices(radical, flag);
  const JumpSet jump_p = jump_indices(p, flag);

  std::vector<std::size_t> expected_i;
  std::set_difference(jump_n.indices.begin(), jump_n.indices.end(), jump_p.indices.begin(),
                      jump_p.indices.end(), std::back_inserter(expected_i));
  rb.check("{i_k} = jump N \\ jump p", trace.i_seq == expected_i,
           "i=" + format_indices(trace.i_seq) + " expected " + format_indices(expected_i));

  std::vector<std::size_t> j_sorted = trace.j_seq;
  std::sort(j_sorted.begin(), j_sorted.end());
  const bool j_injective = std::adjacent_find(j_sorted.begin(), j_sorted.end()) == j_sorted.end();
  rb.check("{j_k} = jump p", j_injective && j_sorted == jump_p.indices,
           "j=" + format_indices(trace.j_seq) + " jump p=" + format_indices(jump_p.indices));

  const bool in_jump_n = std::all_of(trace.j_seq.begin(), trace.j_seq.end(), [&](std::size_t j) {
    return std::binary_search(jump_n.indices.begin(), jump_n.indices.end(), j);
  });
  rb.check("i_k, j_k in jump N", in_jump_n && std::includes(jump_n.indices.begin(), jump_n.indices.end(),
                                                               trace.i_seq.begin(), trace.i_seq.end()));

  rb.check("cardinality |jump N| = 2d, |jump p| = d",
           jump_n.indices.size() == 2 * d && jump_p.indices.size() == d,
           "|jump N|=" + std::to_string(jump_n.indices.size()) +
               " |jump p|=" + std::to_string(jump_p.indices.size()));

  bool signature_ok = false;
  std::string signature_witness;
  try {
    signature_ok = cell_to_signature(jump_p) == signature_vector(b, flag);
    signature_witness = "cell " + format_indices(jump_p.indices) + " disagrees with signature";
  } catch (const InvalidCell& err) {
    signature_witness = err.what();
  }
  rb.check("cell_to_signature(jump p) = signature", signature_ok, signature_witness);

  // dim(p cap V_j) = j below r_1, l on [r_l, r_{l+1})
  std::size_t level = 0;
  bool ladder_ok = true;
  std::string ladder_witness;
  for (std::size_t j = 1; j <= m; ++j) {
    if (!std::binary_search(jump_p.indices.begin(), jump_p.indices.end(), j)) {
      ++level;
    }
    const std::size_t expected = level == 0 ? j : level;
    if (intersect(p, flag.step(j)).dim() != expected && ladder_ok) {
      ladder_ok = false;
      ladder_witness = "j=" + std::to_string(j);
    }
  }
  rb.check("dimension ladder", ladder_ok, ladder_witness);

  rb.check("Lagrangian selection", is_lagrangian(b, p) && contains(p, radical));
  return rb.take();
}

}  // namespace lagsel
