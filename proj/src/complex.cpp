#include "rankpd/complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rankpd/errors.hpp"
#include "rankpd/num_format.hpp"

namespace rankpd {

int WeightedComplex::max_dim() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

const WeightedComplex::Cell* WeightedComplex::find(int id) const {
  for (const auto& c : cells)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::unordered_map<int, std::size_t> index_by_id(const WeightedComplex& k) {
  std::unordered_map<int, std::size_t> idx;
  for (std::size_t i = 0; i < k.cells.size(); ++i) {
    if (!idx.emplace(k.cells[i].id, i).second)
      throw invariant_error("duplicate cell id " + std::to_string(k.cells[i].id));
  }
  return idx;
}

// Boundary as a sorted list of cell indices, repeated faces cancelled mod 2.
std::vector<std::size_t> gf2_boundary(const WeightedComplex::Cell& cell,
                                      const std::unordered_map<int, std::size_t>& idx) {
  std::vector<std::size_t> col;
  for (int fid : cell.boundary) col.push_back(idx.at(fid));
  std::sort(col.begin(), col.end());
  std::vector<std::size_t> reduced;
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i;
    while (j < col.size() && col[j] == col[i]) ++j;
    if ((j - i) % 2) reduced.push_back(col[i]);
    i = j;
  }
  return reduced;
}

}  // namespace

void WeightedComplex::validate() const { validate_weights(weight); }

void WeightedComplex::validate_weights(const WeightMap& w) const {
  const auto idx = index_by_id(*this);
  for (const auto& cell : cells) {
    const auto wit = w.find(cell.id);
    if (wit == w.end())
      throw invariant_error("missing weight for cell " + std::to_string(cell.id));
    if (!(wit->second >= lower - 1e-12) || !(wit->second <= upper + 1e-12))
      throw invariant_error("weight of cell " + std::to_string(cell.id) +
                            " outside bounds");
    for (int fid : cell.boundary) {
      const auto fit = idx.find(fid);
      if (fit == idx.end())
        throw invariant_error("unknown face " + std::to_string(fid));
      const auto& face = cells[fit->second];
      if (face.dim != cell.dim - 1)
        throw invariant_error("face " + std::to_string(fid) +
                              " is not one dimension below cell " +
                              std::to_string(cell.id));
      if (w.at(fid) > wit->second)
        throw invariant_error("non-monotone weight: face " + std::to_string(fid) +
                              " heavier than cell " + std::to_string(cell.id));
    }
  }
  // boundary of boundary vanishes mod 2
  for (const auto& cell : cells) {
    std::set<std::size_t> parity;
    for (std::size_t f : gf2_boundary(cell, idx)) {
      for (std::size_t g : gf2_boundary(cells[f], idx)) {
        if (const auto it = parity.find(g); it != parity.end())
          parity.erase(it);
        else
          parity.insert(g);
      }
    }
    if (!parity.empty())
      throw invariant_error("boundary of boundary nonzero at cell " +
                            std::to_string(cell.id));
  }
}

std::vector<PersistencePair> persistence_pairs(const WeightedComplex& k,
                                               const WeightMap& w) {
  k.validate_weights(w);
  const auto idx = index_by_id(k);
  const std::size_t n = k.cells.size();

  // filtration order: weight, then dimension, then id
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = k.cells[a];
    const auto& cb = k.cells[b];
    const double wa = w.at(ca.id), wb = w.at(cb.id);
    if (wa != wb) return wa < wb;
    if (ca.dim != cb.dim) return ca.dim < cb.dim;
    return ca.id < cb.id;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // columns in filtration positions
  std::vector<std::vector<std::size_t>> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto faces = gf2_boundary(k.cells[order[i]], idx);
    for (auto& f : faces) f = pos[f];
    std::sort(faces.begin(), faces.end());
    cols[i] = std::move(faces);
  }

  const auto xor_into = [](std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
  };

  std::vector<long long> pivot_owner(n, -1);
  std::vector<PersistencePair> pairs;
  std::vector<char> paired(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    auto& col = cols[j];
    while (!col.empty() && pivot_owner[col.back()] >= 0)
      xor_into(col, cols[static_cast<std::size_t>(pivot_owner[col.back()])]);
    if (col.empty()) continue;
    const std::size_t low = col.back();
    pivot_owner[low] = static_cast<long long>(j);
    paired[low] = 1;
    paired[j] = 1;
    pairs.push_back({k.cells[order[low]].dim,
                     k.cells[order[low]].id,
                     k.cells[order[j]].id});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (paired[i]) continue;
    if (!cols[i].empty()) continue;  // unreduced columns were all consumed
    pairs.push_back({k.cells[order[i]].dim, k.cells[order[i]].id, -1});
  }
  return pairs;
}

GradedDiagramFamily compute_diagrams(const WeightedComplex& k) {
  return compute_diagrams(k, k.weight, k.horizon());
}

GradedDiagramFamily compute_diagrams(const WeightedComplex& k, const WeightMap& w,
                                     double horizon) {
  GradedDiagramFamily family;
  for (const auto& pair : persistence_pairs(k, w)) {
    const double birth = w.at(pair.birth_cell);
    const double death = pair.death_cell < 0 ? horizon : w.at(pair.death_cell);
    if (death > birth) family[pair.degree].add({birth, death});
  }
  std::erase_if(family, [](const auto& kv) { return kv.second.empty(); });
  return family;
}

Interval free_module(const WeightedComplex& k, const WeightMap& w, int cell_id,
                     double horizon) {
  if (!k.find(cell_id))
    throw std::invalid_argument("unknown cell " + std::to_string(cell_id));
  return {w.at(cell_id), horizon};
}

double free_module_distance(const WeightedComplex& k, const WeightMap& w,
                            const WeightMap& v, int cell_id, const MetricKind& m) {
  return free_module_distance(k, w, v, cell_id, m, k.horizon());
}

double free_module_distance(const WeightedComplex& k, const WeightMap& w,
                            const WeightMap& v, int cell_id, const MetricKind& m,
                            double horizon) {
  return distance(free_module(k, w, cell_id, horizon),
                  free_module(k, v, cell_id, horizon), m);
}

bool are_compatible(const WeightedComplex& k, const WeightMap& w, const WeightMap& v) {
  const std::size_t n = k.cells.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dw = w.at(k.cells[i].id) - w.at(k.cells[j].id);
      const double dv = v.at(k.cells[i].id) - v.at(k.cells[j].id);
      if ((dw > 0.0 && dv < 0.0) || (dw < 0.0 && dv > 0.0)) return false;
    }
  }
  return true;
}

std::vector<WeightMap> segment_path(const WeightedComplex& k, const WeightMap& w0,
                                    const WeightMap& w1) {
  k.validate_weights(w0);
  k.validate_weights(w1);
  std::vector<double> crossings;
  const std::size_t n = k.cells.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dw = w0.at(k.cells[i].id) - w0.at(k.cells[j].id);
      const double dv = w1.at(k.cells[i].id) - w1.at(k.cells[j].id);
      if ((dw > 0.0 && dv < 0.0) || (dw < 0.0 && dv > 0.0))
        crossings.push_back(dw / (dw - dv));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  std::vector<double> ts{0.0};
  for (double t : crossings) {
    if (t <= 1e-12 || t >= 1.0 - 1e-12) continue;  // chambers are closed
    if (std::abs(t - ts.back()) > 1e-12) ts.push_back(t);
  }
  ts.push_back(1.0);

  std::vector<WeightMap> path;
  for (double t : ts) {
    WeightMap wt;
    for (const auto& cell : k.cells)
      wt[cell.id] = (1.0 - t) * w0.at(cell.id) + t * w1.at(cell.id);
    path.push_back(std::move(wt));
  }
  return path;
}

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream ss{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

}  // namespace

WeightedComplex parse_complex(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw parse_error("complex file: missing `a b` header");
  if (lines[0].size() != 2) throw parse_error("complex file: header must be `a b`");
  WeightedComplex k;
  if (!parse_double(lines[0][0], k.lower) || !parse_double(lines[0][1], k.upper))
    throw parse_error("complex file: bad bounds");
  if (!(k.lower <= k.upper)) throw parse_error("complex file: bounds with a > b");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tok = lines[i];
    if (tok.size() < 3)
      throw parse_error("complex file: cell line needs `id dim w [faces...]`");
    WeightedComplex::Cell cell;
    double w = 0.0;
    if (!parse_int(tok[0], cell.id) || !parse_int(tok[1], cell.dim) ||
        !parse_double(tok[2], w))
      throw parse_error("complex file: bad number on cell line");
    if (cell.dim < 0) throw parse_error("complex file: negative dimension");
    for (std::size_t t = 3; t < tok.size(); ++t) {
      int fid = 0;
      if (!parse_int(tok[t], fid)) throw parse_error("complex file: bad face id");
      cell.boundary.push_back(fid);
    }
    k.cells.push_back(std::move(cell));
    k.weight[k.cells.back().id] = w;
  }
  index_by_id(k);  // rejects duplicate ids
  for (const auto& cell : k.cells)
    for (int fid : cell.boundary)
      if (!k.find(fid))
        throw parse_error("complex file: face " + std::to_string(fid) +
                          " is not declared");
  return k;
}

std::string format_complex(const WeightedComplex& k) {
  std::string out = fmt_double(k.lower) + " " + fmt_double(k.upper) + "\n";
  auto cells = k.cells;
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& cell : cells) {
    out += std::to_string(cell.id) + " " + std::to_string(cell.dim) + " " +
           fmt_double(k.weight.at(cell.id));
    for (int fid : cell.boundary) out += " " + std::to_string(fid);
    out += '\n';
  }
  return out;
}

WeightMap parse_weights(std::string_view text) {
  WeightMap w;
  for (const auto& tok : tokenized_lines(text)) {
    if (tok.size() != 2) throw parse_error("weight file: lines are `id value`");
    int id = 0;
    double v = 0.0;
    if (!parse_int(tok[0], id) || !parse_double(tok[1], v))
      throw parse_error("weight file: bad number");
    w[id] = v;
  }
  return w;
}

std::string format_weights(const WeightMap& w) {
  std::string out;
  for (const auto& [id, v] : w) out += std::to_string(id) + " " + fmt_double(v) + "\n";
  return out;
}

}  // namespace rankpd
