#pragma once

// Taylor coefficients of the local error of a splitting scheme and the
// order-condition systems extracted from them.
//
// For linear operators the q-th h-derivative at h = 0 of
//   S(h) - exp(h(A + B)),   S(h) = S_s(h) ... S_1(h),
//   S_j(h) = exp(h b_j B) exp(h a_j A)
// is, by the Leibniz rule,
//   sum_{|k| = q} q!/(k_1!...k_s!) prod_{j=s..1} sum_l C(k_j, l) b_j^l a_j^(k_j-l) B^l A^(k_j-l)
//   - (A + B)^q,
// with the obvious trinomial stage factor when a third operator C is split
// off. Once all lower-order conditions hold, the derivative is a Lie
// element, so its coefficients at the Lyndon words of degree q form a
// complete set of order-q conditions.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "ansatz.hpp"
#include "coeff_poly.hpp"
#include "lyndon.hpp"
#include "nc_poly.hpp"
#include "scheme.hpp"

namespace splitoc {

using Composition = std::vector<int>;

/// Calls `fn(k)` for every k in N_0^s with |k| = q, in lexicographic order
/// (first (0,...,0,q), last (q,0,...,0)).
template <class Fn>
void for_each_composition(int q, int s, Fn&& fn) {
  if (q < 0 || s < 1)
    throw invalid_input("compositions: need q >= 0 and s >= 1");
  Composition k(static_cast<std::size_t>(s), 0);
  k.back() = q;
  while (true) {
    fn(static_cast<const Composition&>(k));
    // Rightmost position (excluding the last) that still has mass after it.
    int tail = k.back();
    int i = s - 2;
    while (i >= 0 && tail == 0)
      tail += k[static_cast<std::size_t>(i--)];
    if (i < 0)
      return;
    // Position i receives one unit; the remainder moves to the last slot.
    int rest = -1;
    for (int j = i + 1; j < s; ++j) {
      rest += k[static_cast<std::size_t>(j)];
      k[static_cast<std::size_t>(j)] = 0;
    }
    ++k[static_cast<std::size_t>(i)];
    k.back() = rest;
  }
}

inline std::vector<Composition> compositions(int q, int s) {
  std::vector<Composition> out;
  for_each_composition(q, s, [&](const Composition& k) { out.push_back(k); });
  return out;
}

/// q! / (k_1! ... k_n!).
inline BigInt multinomial(int q, std::span<const int> k) {
  int sum = 0;
  for (int part : k) {
    if (part < 0)
      throw invalid_input("multinomial: negative part");
    sum += part;
  }
  if (sum != q)
    throw invalid_input("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                        std::to_string(q));
  // Product of binomials C(k_1 + ... + k_i, k_i) keeps intermediates integral.
  BigInt result = 1;
  int seen = 0;
  for (int part : k) {
    for (int t = 1; t <= part; ++t) {
      result *= seen + t;
      result /= t;
    }
    seen += part;
  }
  return result;
}

inline BigInt multinomial(int q, std::initializer_list<int> k) {
  return multinomial(q, std::span<const int>(k.begin(), k.size()));
}

/// k_j-th derivative of exp(h c_j C) exp(h b_j B) exp(h a_j A) at h = 0 with
/// words ordered C-block, B-block, A-block.
inline NCPoly stage_expansion(const SchemeSpec& spec, int stage, int order) {
  spec.validate();
  if (stage < 1 || stage > spec.stages)
    throw invalid_input("stage_expansion: stage index out of range");
  if (order < 0)
    throw invalid_input("stage_expansion: negative order");
  NCPoly out;
  const int m = spec.operators;
  // Exponents of (C, B, A) summing to `order`; letter index 2 is C.
  for_each_composition(order, m, [&](const Composition& split) {
    Word word;
    CoeffMonomial mono;
    for (int pos = 0; pos < m; ++pos) {
      const int letter = m - 1 - pos;
      const int e = split[static_cast<std::size_t>(pos)];
      for (int r = 0; r < e; ++r)
        word.push_back(letter);
      mono = mono * CoeffMonomial(Unknown{static_cast<Family>(letter), stage}, e);
    }
    out.add_term(word, CoeffPoly(mono, Rational(multinomial(order, split))));
  });
  return out;
}

/// (A + B)^q or (A + B + C)^q.
inline NCPoly exact_flow_term(int operators, int order) {
  NCPoly sum;
  for (int letter = 0; letter < operators; ++letter)
    sum += NCPoly::letter(letter);
  return pow(sum, order);
}

namespace detail {

// stage_table[j - 1][k] = stage_expansion(spec, j, k) for k = 0..q.
inline std::vector<std::vector<NCPoly>> stage_table(const SchemeSpec& spec, int q) {
  std::vector<std::vector<NCPoly>> table(static_cast<std::size_t>(spec.stages));
  for (int j = 1; j <= spec.stages; ++j)
    for (int k = 0; k <= q; ++k)
      table[static_cast<std::size_t>(j - 1)].push_back(stage_expansion(spec, j, k));
  return table;
}

inline NCPoly composition_product(const std::vector<std::vector<NCPoly>>& table,
                                  const Composition& k) {
  NCPoly product = NCPoly::one();
  for (std::size_t j = k.size(); j-- > 0;)
    product *= table[j][static_cast<std::size_t>(k[j])];
  return product;
}

} // namespace detail

/// Full q-th derivative of the local error at h = 0, no ansatz applied.
inline NCPoly derivative_term(const SchemeSpec& spec, int q) {
  spec.validate();
  if (q < 1)
    throw invalid_input("derivative_term: order must be >= 1");
  const auto table = detail::stage_table(spec, q);
  NCPoly out;
  for_each_composition(q, spec.stages, [&](const Composition& k) {
    out += detail::composition_product(table, k) * CoeffPoly(multinomial(q, k));
  });
  out -= exact_flow_term(spec.operators, q);
  return out;
}

struct Condition {
  Word word;
  CoeffPoly poly;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Conditions of one order q, keyed by Lyndon words of degree q.
struct ConditionBlock {
  int order = 0;
  std::vector<Condition> conditions;

  friend bool operator==(const ConditionBlock&, const ConditionBlock&) = default;
};

struct OrderConditionSystem {
  SchemeSpec spec;
  int order = 0;
  std::vector<ConditionBlock> blocks;

  friend bool operator==(const OrderConditionSystem&, const OrderConditionSystem&) = default;
};

/// Degree-(p+1) Lyndon coefficients: the leading local-error term of an
/// order-p scheme.
struct LeadingErrorTerm {
  SchemeSpec spec;
  int order = 0;
  ConditionBlock block;

  friend bool operator==(const LeadingErrorTerm&, const LeadingErrorTerm&) = default;
};

/// Worker count from SPLITOC_WORKERS, else the hardware concurrency.
inline unsigned default_worker_count() {
  if (const char* env = std::getenv("SPLITOC_WORKERS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 4096)
      return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Coefficients of the q-th derivative at every Lyndon word of degree q,
/// without any ansatz.
///
/// Deterministic map-reduce: composition i goes to worker i mod n; each
/// worker accumulates its own coefficient vector; a single reducer adds the
/// partial vectors in worker order to the (A + B)^q contribution of -1 per
/// word. Exact arithmetic makes the result independent of n.
inline ConditionBlock lyndon_coefficients(const SchemeSpec& spec, int q, unsigned workers = 1) {
  spec.validate();
  if (q < 1 || q > kMaxWordDegree)
    throw invalid_input("order must lie in [1, " + std::to_string(kMaxWordDegree) + "]");
  const std::vector<Word> basis = lyndon_words(spec.alphabet(), q);
  const std::vector<Composition> ks = compositions(q, spec.stages);
  const auto table = detail::stage_table(spec, q);
  const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, ks.size()));

  std::vector<std::vector<CoeffPoly>> partial(n_workers, std::vector<CoeffPoly>(basis.size()));
  std::vector<std::exception_ptr> failures(n_workers);
  auto work = [&](std::size_t w) {
    try {
      auto& acc = partial[w];
      for (std::size_t i = w; i < ks.size(); i += n_workers) {
        const NCPoly product = detail::composition_product(table, ks[i]);
        const Rational weight(multinomial(q, ks[i]));
        for (std::size_t l = 0; l < basis.size(); ++l) {
          auto it = product.terms().find(basis[l]);
          if (it != product.terms().end())
            acc[l] += it->second * weight;
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w)
      pool.emplace_back(work, w);
  }
  for (const auto& f : failures)
    if (f)
      std::rethrow_exception(f);

  ConditionBlock block{q, {}};
  block.conditions.reserve(basis.size());
  for (std::size_t l = 0; l < basis.size(); ++l) {
    CoeffPoly total(-1);
    for (std::size_t w = 0; w < n_workers; ++w)
      total += partial[w][l];
    block.conditions.push_back({basis[l], std::move(total)});
  }
  return block;
}

/// Substitutes the ansatz into a block. Unless the scheme is plain, conditions
/// that vanish identically or repeat an earlier one are dropped.
inline ConditionBlock apply_ansatz(const SchemeSpec& spec, const ConditionBlock& block) {
  if (spec.ansatz == Ansatz::plain && spec.fixed.empty())
    return block;
  const Substitution sub = ansatz_substitution(spec);
  ConditionBlock out{block.order, {}};
  for (const auto& c : block.conditions) {
    CoeffPoly reduced = substitute(c.poly, sub);
    if (reduced.is_zero())
      continue;
    bool repeated = false;
    for (const auto& kept : out.conditions)
      repeated = repeated || kept.poly == reduced;
    if (!repeated)
      out.conditions.push_back({c.word, std::move(reduced)});
  }
  return out;
}

inline OrderConditionSystem apply_ansatz(const SchemeSpec& spec, const OrderConditionSystem& system) {
  OrderConditionSystem out{spec, system.order, {}};
  for (const auto& block : system.blocks)
    out.blocks.push_back(apply_ansatz(spec, block));
  return out;
}

/// Order conditions for orders 1..p, unsolved. Symmetric schemes skip even
/// orders, which they satisfy automatically once consistent.
inline OrderConditionSystem order_conditions(const SchemeSpec& spec, int p, unsigned workers = 1) {
  spec.validate();
  if (p < 1)
    throw invalid_input("order_conditions: order must be >= 1");
  ansatz_substitution(spec);
  OrderConditionSystem system{spec, p, {}};
  for (int q = 1; q <= p; ++q) {
    if (is_symmetric(spec.ansatz) && q % 2 == 0)
      continue;
    system.blocks.push_back(apply_ansatz(spec, lyndon_coefficients(spec, q, workers)));
  }
  return system;
}

inline LeadingErrorTerm leading_error(const SchemeSpec& spec, int p, unsigned workers = 1) {
  spec.validate();
  if (p < 1)
    throw invalid_input("leading_error: order must be >= 1");
  return LeadingErrorTerm{spec, p, apply_ansatz(spec, lyndon_coefficients(spec, p + 1, workers))};
}

} // namespace splitoc
