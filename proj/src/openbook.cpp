#include "tribranch/openbook.hpp"

#include <algorithm>

namespace tribranch {

namespace {

std::string dims(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::vector<BigInt> column(const IntMatrix& m, int c) {
  std::vector<BigInt> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
  return out;
}

IntMatrix mul_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
  IntMatrix x(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<int>(i), 0) = v[i];
  return m * x;
}

}  // namespace

int h1_rank(SurfaceSig page) { return 2 * page.genus + std::max(page.n_boundary - 1, 0); }

MonodromyH1 MonodromyH1::identity(SurfaceSig page) {
  return {IntMatrix::identity(h1_rank(page)), IntMatrix{}};
}

IntMatrix intersection_form(SurfaceSig page) {
  const int k = h1_rank(page);
  IntMatrix j(k, k);
  for (int i = 0; i < page.genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

ValidationReport validate_monodromy(SurfaceSig page, const MonodromyH1& m) {
  ValidationReport report;
  if (page.genus < 0 || page.n_boundary < 1) {
    report.add("monodromy", "page of an open book needs at least one boundary component");
    return report;
  }
  const int k = h1_rank(page);
  const auto& a = m.matrix;
  if (a.rows() != k || a.cols() != k) {
    report.add("monodromy", "matrix dimension: expected " + std::to_string(k) + "x" +
                                std::to_string(k) + ", got " + dims(a));
    return report;
  }
  for (int i = 0; i + 1 < page.n_boundary; ++i) {
    const int col = 2 * page.genus + i;
    for (int r = 0; r < k; ++r) {
      if (a(r, col) != (r == col ? 1 : 0)) {
        report.add("monodromy", "boundary class not fixed: c_" + std::to_string(i + 1));
        break;
      }
    }
  }
  const IntMatrix j = intersection_form(page);
  if (a.transpose() * j * a != j) report.add("monodromy", "intersection form not preserved");
  const BigInt det = determinant(a);
  if (det != 1 && det != -1) report.add("monodromy", "determinant " + det.str() + " is not +-1");

  const auto& var = m.arc_variation;
  const int arcs = page.n_boundary - 1;
  const bool empty = var.rows() == 0 && var.cols() == 0;
  if (!empty && (var.rows() != k || var.cols() != arcs)) {
    report.add("monodromy", "arc variation dimension: expected " + std::to_string(k) + "x" +
                                std::to_string(arcs) + ", got " + dims(var));
  }
  return report;
}

IntMatrix h1_presentation(const OpenBookSpec& spec) {
  const int k = h1_rank(spec.page);
  IntMatrix rel = spec.monodromy.matrix - IntMatrix::identity(k);
  const auto& var = spec.monodromy.arc_variation;
  if (var.rows() == k && var.cols() > 0) rel = hconcat(rel, var);
  return rel;
}

AbelianGroup h1_open_book(const OpenBookSpec& spec) {
  const auto report = validate_monodromy(spec.page, spec.monodromy);
  if (!report.ok()) throw TopologyError("invalid monodromy: " + report.violations.front().message);
  return cokernel(h1_presentation(spec));
}

std::string to_string(RankVerdict v) { return v == RankVerdict::Certified ? "Certified" : "Uncertified"; }

RankCertificate rank_certificate(const OpenBookSpec& spec) {
  RankCertificate cert;
  cert.h1 = h1_open_book(spec);
  cert.lower_bound = min_generators(cert.h1);
  const std::string bound = std::to_string(cert.lower_bound);
  if (cert.lower_bound >= 4) {
    cert.verdict = RankVerdict::Certified;
    cert.statement = "rank pi_1(M) >= min generators of H_1(M) = " + bound +
                     " >= 4: hypothesis established";
  } else {
    cert.verdict = RankVerdict::Uncertified;
    cert.statement = "min generators of H_1(M) = " + bound +
                     " < 4: hypothesis not established (this does not mean it is false)";
  }
  return cert;
}

StabilizationResult stabilize(const OpenBookSpec& spec, int site, bool extend_path) {
  const SurfaceSig old_page = spec.page;
  const int g = old_page.genus;
  const int b = old_page.n_boundary;
  if (site < 1 || site > b) throw TopologyError("invalid site " + std::to_string(site));
  const auto report = validate_monodromy(old_page, spec.monodromy);
  if (!report.ok()) throw TopologyError("invalid monodromy: " + report.violations.front().message);

  const SurfaceSig new_page{g, b + 1};
  const int k = h1_rank(old_page);
  const int nk = h1_rank(new_page);
  auto c_index = [&](int label) { return 2 * g + label - 1; };

  // The old component `site` splits into `site` and the new component b + 1,
  // whose class e = -(c'_1 + ... + c'_b) is the stabilizing curve's class.
  std::vector<BigInt> e(static_cast<std::size_t>(nk));
  for (int j = 1; j <= b; ++j) e[c_index(j)] = -1;

  IntMatrix embed(nk, k);
  for (int i = 0; i < 2 * g; ++i) embed(i, i) = 1;
  for (int i = 1; i < b; ++i) {
    if (i != site) {
      embed(c_index(i), c_index(i)) = 1;
    } else {
      for (int j = 1; j <= b; ++j)
        if (j != site) embed(c_index(j), c_index(i)) = -1;
    }
  }

  // Monodromy extended by the identity over the handle.
  IntMatrix extended = IntMatrix::identity(nk);
  for (int c = 0; c < 2 * g; ++c) {
    const IntMatrix img = mul_vec(embed, column(spec.monodromy.matrix, c));
    for (int r = 0; r < nk; ++r) extended(r, c) = img(r, 0);
  }

  // Homological transvection of the positive twist: x -> x + <x, e> e.
  const IntMatrix form = intersection_form(new_page);
  IntMatrix transvection = IntMatrix::identity(nk);
  for (int c = 0; c < nk; ++c) {
    BigInt pairing = 0;
    for (int r = 0; r < nk; ++r) pairing += form(c, r) * e[r];
    for (int r = 0; r < nk; ++r) transvection(r, c) += pairing * e[r];
  }

  // Arc variations. New arcs run from component b + 1 to i = 1..b; each one
  // follows the old arc from `site` and crosses the stabilizing curve once.
  const auto& old_var = spec.monodromy.arc_variation;
  auto old_arc = [&](int label) {
    std::vector<BigInt> v(static_cast<std::size_t>(k));
    if (label < b && old_var.rows() == k && old_var.cols() == b - 1)
      for (int r = 0; r < k; ++r) v[r] = old_var(r, label - 1);
    return v;
  };
  IntMatrix new_var(nk, b);
  const auto site_arc = old_arc(site);
  for (int i = 1; i <= b; ++i) {
    auto diff = old_arc(i);
    for (int r = 0; r < k; ++r) diff[r] -= site_arc[r];
    const IntMatrix img = mul_vec(embed, diff);
    for (int r = 0; r < nk; ++r) new_var(r, i - 1) = img(r, 0) + e[r];
  }

  StabilizationResult out;
  out.change_of_basis = embed;
  out.spec = spec;
  out.spec.page = new_page;
  out.spec.monodromy.matrix = transvection * extended;
  out.spec.monodromy.arc_variation = new_var;
  out.spec.pants_data.reset();

  if (extend_path && spec.pants_data) {
    PantsPath path = *spec.pants_data;
    std::int64_t fresh = path.start.max_curve_id();
    for (const auto& mv : path.moves) fresh = std::max(fresh, mv.added.value);
    const CurveId collar{fresh + 1};
    const int w = path.start.num_pants;
    const Slot old_leg = path.start.legs.at(site - 1);
    path.start.num_pants += 1;
    path.start.curves.push_back({collar, {old_leg, Slot{w, 0}}});
    path.start.legs[site - 1] = Slot{w, 1};
    path.start.legs.push_back(Slot{w, 2});
    path.closure[collar] = collar;
    out.spec.pants_data = std::move(path);
    out.path_extended = true;
  }
  return out;
}

}  // namespace tribranch
