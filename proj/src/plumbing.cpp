#include "sfs/plumbing.hpp"

#include <stdexcept>

namespace sfs {

std::size_t PlumbingGraph::vertex_count() const {
  std::size_t n = 1;
  for (const auto& a : arms) n += a.terms.size();
  return n;
}

std::size_t PlumbingGraph::arm_start(std::size_t i) const {
  std::size_t n = 1;
  for (std::size_t j = 0; j < i; ++j) n += arms.at(j).terms.size();
  return n;
}

std::vector<BigInt> PlumbingGraph::weights() const {
  std::vector<BigInt> w{central_weight};
  for (const auto& a : arms) w.insert(w.end(), a.terms.begin(), a.terms.end());
  return w;
}

std::vector<std::pair<std::size_t, std::size_t>> PlumbingGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t v = 1;
  for (const auto& a : arms) {
    e.emplace_back(0, v);
    for (std::size_t i = 1; i < a.terms.size(); ++i) e.emplace_back(v + i - 1, v + i);
    v += a.terms.size();
  }
  return e;
}

std::vector<long> PlumbingGraph::arm_of_vertex() const {
  std::vector<long> out{-1};
  for (std::size_t i = 0; i < arms.size(); ++i) out.insert(out.end(), arms[i].terms.size(), static_cast<long>(i));
  return out;
}

std::string PlumbingGraph::to_text() const {
  std::string s;
  auto w = weights();
  for (std::size_t i = 0; i < w.size(); ++i) s += "vertex " + std::to_string(i) + " " + w[i].get_str() + "\n";
  for (auto [u, v] : edges()) s += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

PlumbingGraph build_plumbing(const StandardForm& s) {
  PlumbingGraph g;
  g.genus = s.genus;
  g.central_weight = s.central;
  for (const auto& r : s.fibers) g.arms.push_back(neg_cfrac_expand(r));
  return g;
}

IntMatrix intersection_form(const PlumbingGraph& g) {
  auto w = g.weights();
  IntMatrix q(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) q(i, i) = w[i];
  for (auto [u, v] : g.edges()) {
    q(u, v) = -1;
    q(v, u) = -1;
  }
  return q;
}

bool is_positive_definite(const IntMatrix& q) {
  if (q.rows() != q.cols()) throw std::invalid_argument("positive definiteness of a non-square matrix");
  for (const auto& m : leading_minors(q))
    if (m <= 0) return false;
  return true;
}

}  // namespace sfs
