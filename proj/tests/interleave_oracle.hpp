// Copyright 2026 The lexmark authors
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

#pragma once

// Brute-force reference semantics for interleaved content models, kept
// deliberately independent of the production matcher: a child sequence is
// accepted iff some assignment of children to branches yields per-branch
// subsequences (in original relative order) that each match their branch.

#include <random>
#include <string>
#include <vector>

namespace oracle {

struct Atom {
  std::string name;
  char mod = '1';  // '1' exactly one, '?' optional, '*' any, '+' one or more
};
using Branch = std::vector<Atom>;

struct Model {
  std::vector<Branch> branches;
};

inline bool match_from(const Branch& branch, size_t i,
                       const std::vector<std::string>& seq, size_t j) {
  if (i == branch.size()) return j == seq.size();
  const Atom& atom = branch[i];
  auto here = [&](size_t jj) {
    return jj < seq.size() && seq[jj] == atom.name;
  };
  switch (atom.mod) {
    case '1':
      return here(j) && match_from(branch, i + 1, seq, j + 1);
    case '?':
      if (match_from(branch, i + 1, seq, j)) return true;
      return here(j) && match_from(branch, i + 1, seq, j + 1);
    case '*': {
      for (size_t jj = j;; ++jj) {
        if (match_from(branch, i + 1, seq, jj)) return true;
        if (!here(jj)) return false;
      }
    }
    case '+': {
      for (size_t jj = j; here(jj);) {
        ++jj;
        if (match_from(branch, i + 1, seq, jj)) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool branch_matches(const Branch& branch,
                           const std::vector<std::string>& seq) {
  return match_from(branch, 0, seq, 0);
}

// Enumerates every assignment of children to branches.
inline bool accepts(const Model& model,
                    const std::vector<std::string>& children) {
  const size_t k = model.branches.size();
  const size_t n = children.size();
  std::vector<size_t> assign(n, 0);
  for (;;) {
    std::vector<std::vector<std::string>> parts(k);
    for (size_t i = 0; i < n; ++i) parts[assign[i]].push_back(children[i]);
    bool ok = true;
    for (size_t b = 0; ok && b < k; ++b)
      ok = branch_matches(model.branches[b], parts[b]);
    if (ok) return true;
    size_t i = 0;
    while (i < n && ++assign[i] == k) assign[i++] = 0;
    if (i == n) return false;
  }
}

inline const std::vector<std::string>& alphabet() {
  static const std::vector<std::string> names{"a", "b", "c", "d"};
  return names;
}

// Up to 4 interleaved branches over at most 6 element atoms in total.
inline Model random_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_k(1, 4);
  const int k = pick_k(rng);
  std::vector<int> sizes(static_cast<size_t>(k), 1);
  std::uniform_int_distribution<int> extra(0, 6 - k);
  int budget = extra(rng);
  std::uniform_int_distribution<int> which(0, k - 1);
  while (budget-- > 0) {
    int b = which(rng);
    if (sizes[static_cast<size_t>(b)] < 3) ++sizes[static_cast<size_t>(b)];
  }
  std::uniform_int_distribution<size_t> pick_name(0, alphabet().size() - 1);
  const char mods[4] = {'1', '?', '*', '+'};
  std::uniform_int_distribution<int> pick_mod(0, 3);
  Model model;
  for (int b = 0; b < k; ++b) {
    Branch branch;
    for (int i = 0; i < sizes[static_cast<size_t>(b)]; ++i)
      branch.push_back({alphabet()[pick_name(rng)], mods[pick_mod(rng)]});
    model.branches.push_back(std::move(branch));
  }
  return model;
}

inline std::string to_schema_text(const Model& model) {
  std::string out = "start = element root { ";
  for (size_t b = 0; b < model.branches.size(); ++b) {
    if (b) out += " & ";
    out += "( ";
    for (size_t i = 0; i < model.branches[b].size(); ++i) {
      if (i) out += " , ";
      const Atom& atom = model.branches[b][i];
      out += "element " + atom.name + " { empty }";
      if (atom.mod != '1') out += std::string(" ") + atom.mod;
    }
    out += " )";
  }
  out += " }";
  return out;
}

// A child sequence the model accepts: one instance per branch, the branch
// queues merged in random order.
inline std::vector<std::string> sample_instance(const Model& model,
                                                std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::vector<std::string>> queues;
  for (const Branch& branch : model.branches) {
    std::vector<std::string> q;
    for (const Atom& atom : branch) {
      int count = 0;
      switch (atom.mod) {
        case '1': count = 1; break;
        case '?': count = coin(rng); break;
        case '*': count = coin(rng); break;
        case '+': count = 1; break;
      }
      for (int c = 0; c < count; ++c) q.push_back(atom.name);
    }
    queues.push_back(std::move(q));
  }
  std::vector<std::string> merged;
  for (;;) {
    std::vector<size_t> nonempty;
    for (size_t i = 0; i < queues.size(); ++i)
      if (!queues[i].empty()) nonempty.push_back(i);
    if (nonempty.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, nonempty.size() - 1);
    auto& q = queues[nonempty[pick(rng)]];
    merged.push_back(q.front());
    q.erase(q.begin());
  }
  return merged;
}

inline std::vector<std::string> random_children(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_len(0, 6);
  std::uniform_int_distribution<size_t> pick_name(0, alphabet().size() - 1);
  std::vector<std::string> children;
  const int len = pick_len(rng);
  for (int i = 0; i < len; ++i) children.push_back(alphabet()[pick_name(rng)]);
  return children;
}

}  // namespace oracle
