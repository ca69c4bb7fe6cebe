#include <algorithm>
#include <string>
#include <vector>

#include "catlattice/exceptions.hpp"
#include "catlattice/lattice.hpp"

namespace catlattice {

namespace {

// Canonical bracket encodings of the in-trees, built bottom-up in Kahn
// peeling order (a node is popped only after all of its tree children).
struct TreeEncodings {
  std::vector<bool> on_cycle;
  std::vector<std::string> encoding;  // for cycle nodes: the attached in-tree
};

TreeEncodings encode_trees(const std::vector<long long>& succ) {
  const long long total = static_cast<long long>(succ.size());
  std::vector<std::int32_t> indeg(succ.size(), 0);
  for (long long i = 0; i < total; ++i) ++indeg[static_cast<std::size_t>(succ[i])];

  std::vector<std::vector<std::string>> pending(succ.size());
  std::vector<long long> stack;
  for (long long i = 0; i < total; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) stack.push_back(i);

  TreeEncodings out;
  out.on_cycle.assign(succ.size(), true);
  out.encoding.assign(succ.size(), std::string());

  auto combine = [](std::vector<std::string>& parts) {
    std::sort(parts.begin(), parts.end());
    std::string enc = "(";
    for (const auto& p : parts) enc += p;
    enc += ")";
    return enc;
  };

  while (!stack.empty()) {
    const long long i = stack.back();
    stack.pop_back();
    out.on_cycle[static_cast<std::size_t>(i)] = false;
    out.encoding[static_cast<std::size_t>(i)] = combine(pending[static_cast<std::size_t>(i)]);
    pending[static_cast<std::size_t>(i)].clear();
    const long long j = succ[static_cast<std::size_t>(i)];
    pending[static_cast<std::size_t>(j)].push_back(out.encoding[static_cast<std::size_t>(i)]);
    if (--indeg[static_cast<std::size_t>(j)] == 0) stack.push_back(j);
  }
  for (long long i = 0; i < total; ++i)
    if (out.on_cycle[static_cast<std::size_t>(i)])
      out.encoding[static_cast<std::size_t>(i)] = combine(pending[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::string> minimal_rotation(std::vector<std::string> seq) {
  const std::size_t len = seq.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < len; ++start) {
    for (std::size_t k = 0; k < len; ++k) {
      const std::string& cand = seq[(start + k) % len];
      const std::string& cur = seq[(best + k) % len];
      if (cand < cur) {
        best = start;
        break;
      }
      if (cur < cand) break;
    }
  }
  std::vector<std::string> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(seq[(best + k) % len]);
  return out;
}

}  // namespace

FunctionalGraphCanon canonical_graph(const Mat2Z& m, long long n, long long budget_override) {
  if (n < 2) throw PreconditionError("canonical_graph: modulus must be >= 2");
  const long long budget = budget_override > 0 ? budget_override : enumeration_budget();
  if (n > budget)
    throw BudgetError("lattice modulus " + std::to_string(n) +
                      " exceeds the enumeration budget " + std::to_string(budget));

  const Mat2Zn r = reduce(m, Int(n));
  const long long a = r.a.convert_to<long long>();
  const long long b = r.b.convert_to<long long>();
  const long long c = r.c.convert_to<long long>();
  const long long d = r.d.convert_to<long long>();
  const long long total = n * n;
  std::vector<long long> succ(static_cast<std::size_t>(total));
  for (long long i = 0; i < total; ++i) {
    const long long x = i % n, y = i / n;
    succ[static_cast<std::size_t>(i)] = (a * x + b * y) % n + n * ((c * x + d * y) % n);
  }

  const TreeEncodings trees = encode_trees(succ);

  std::vector<std::string> components;
  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  for (long long start = 0; start < total; ++start) {
    if (!trees.on_cycle[static_cast<std::size_t>(start)] ||
        visited[static_cast<std::size_t>(start)])
      continue;
    std::vector<std::string> around;
    long long i = start;
    do {
      visited[static_cast<std::size_t>(i)] = true;
      around.push_back(trees.encoding[static_cast<std::size_t>(i)]);
      i = succ[static_cast<std::size_t>(i)];
    } while (i != start);
    around = minimal_rotation(std::move(around));
    std::string comp = std::to_string(around.size()) + "[";
    for (std::size_t k = 0; k < around.size(); ++k) {
      if (k > 0) comp += ",";
      comp += around[k];
    }
    comp += "]";
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end());
  std::string enc;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k > 0) enc += ";";
    enc += components[k];
  }
  return {std::move(enc)};
}

bool same_local_statistics(const Mat2Z& m1, const Mat2Z& m2, long long n) {
  return canonical_graph(m1, n) == canonical_graph(m2, n);
}

}  // namespace catlattice
