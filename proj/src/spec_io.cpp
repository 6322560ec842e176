#include "tribranch/spec_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <limits>

namespace tribranch {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

long long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long long>();
}

BigInt as_big(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw SchemaError(where + ": \"" + s + "\" is not an integer");
    return BigInt(s);
  }
  throw SchemaError(where + ": expected an integer or a decimal string");
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) throw SchemaError(where + ": expected an array of rows");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) throw SchemaError(where + ": ragged rows");
  }
  IntMatrix m(rows, std::max(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = as_big(j[r][c], where);
  return m;
}

Slot slot_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": a slot is [pants, cuff]");
  // Cuffs are 1..3 on disk.
  return Slot{static_cast<int>(as_int(j[0], where)), static_cast<int>(as_int(j[1], where)) - 1};
}

Json slot_to_json(const Slot& s) { return Json::array({s.vertex, s.cuff + 1}); }

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

PantsMove move_from_json(const Json& j, const std::string& where) {
  PantsMove mv;
  mv.removed = CurveId{as_int(require(j, "removed", where), where)};
  mv.added = CurveId{as_int(require(j, "added", where), where)};
  const auto& kind = require(j, "kind", where);
  if (kind == "A") {
    mv.kind = MoveKind::A;
  } else if (kind == "S") {
    mv.kind = MoveKind::S;
  } else {
    throw SchemaError(where + ": kind must be \"A\" or \"S\"");
  }
  if (j.contains("pairing")) mv.pairing = static_cast<int>(as_int(j.at("pairing"), where));
  return mv;
}

Json move_to_json(const PantsMove& mv) {
  Json j{{"removed", mv.removed.value}, {"added", mv.added.value}, {"kind", to_string(mv.kind)}};
  if (mv.kind == MoveKind::A) j["pairing"] = mv.pairing;
  return j;
}

Json sig_to_json(SurfaceSig s) { return Json{{"genus", s.genus}, {"boundary", s.n_boundary}}; }

}  // namespace

PantsDecomposition decomposition_from_json(const Json& j) {
  const std::string where = "decomposition";
  PantsDecomposition pd;
  pd.num_pants = static_cast<int>(as_int(require(j, "pants", where), where));
  const auto& curves = require(j, "curves", where);
  if (!curves.is_array()) throw SchemaError(where + ": curves must be an array");
  for (const auto& c : curves) {
    const auto& ends = require(c, "ends", where);
    if (!ends.is_array() || ends.size() != 2) throw SchemaError(where + ": a curve has two ends");
    pd.curves.push_back({CurveId{as_int(require(c, "id", where), where)},
                         {slot_from_json(ends[0], where), slot_from_json(ends[1], where)}});
  }
  const auto& legs = require(j, "legs", where);
  if (!legs.is_array()) throw SchemaError(where + ": legs must be an array");
  for (const auto& l : legs) pd.legs.push_back(slot_from_json(l, where));
  return pd;
}

Json decomposition_to_json(const PantsDecomposition& pd) {
  Json curves = Json::array();
  for (const auto& c : pd.curves)
    curves.push_back({{"id", c.id.value}, {"ends", Json::array({slot_to_json(c.ends[0]), slot_to_json(c.ends[1])})}});
  Json legs = Json::array();
  for (const auto& l : pd.legs) legs.push_back(slot_to_json(l));
  return Json{{"pants", pd.num_pants}, {"curves", curves}, {"legs", legs}};
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(big_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

OpenBookSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("spec: top level must be an object");

  OpenBookSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("spec: name must be a string");
    spec.name = j["name"].get<std::string>();
  }
  const auto& page = require(j, "page", "spec");
  spec.page.genus = static_cast<int>(as_int(require(page, "genus", "page"), "page.genus"));
  spec.page.n_boundary = static_cast<int>(as_int(require(page, "boundary", "page"), "page.boundary"));

  const auto& mono = require(j, "monodromy", "spec");
  spec.monodromy.matrix = matrix_from_json(require(mono, "h1_matrix", "monodromy"), "monodromy.h1_matrix");
  if (mono.contains("arc_variation"))
    spec.monodromy.arc_variation = matrix_from_json(mono.at("arc_variation"), "monodromy.arc_variation");

  if (mono.contains("pants_path") && !mono.at("pants_path").is_null()) {
    const auto& p = mono.at("pants_path");
    PantsPath path;
    path.start = decomposition_from_json(require(p, "start", "pants_path"));
    if (p.contains("moves")) {
      if (!p.at("moves").is_array()) throw SchemaError("pants_path: moves must be an array");
      for (const auto& m : p.at("moves")) path.moves.push_back(move_from_json(m, "pants_path.moves"));
    }
    const auto& closure = require(p, "closure", "pants_path");
    if (!closure.is_object()) throw SchemaError("pants_path: closure must be an object");
    for (const auto& [key, value] : closure.items()) {
      long long from = 0;
      try {
        std::size_t used = 0;
        from = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw SchemaError("pants_path.closure: key \"" + key + "\" is not a curve id");
      }
      path.closure[CurveId{from}] = CurveId{as_int(value, "pants_path.closure")};
    }
    spec.pants_data = std::move(path);
  }

  if (j.contains("options")) {
    const auto& opts = j.at("options");
    if (!opts.is_object()) throw SchemaError("spec: options must be an object");
    if (opts.contains("degenerate_path_convention")) {
      if (!opts.at("degenerate_path_convention").is_boolean())
        throw SchemaError("options.degenerate_path_convention must be a boolean");
      spec.degenerate_path_convention = opts.at("degenerate_path_convention").get<bool>();
    }
  }
  return spec;
}

Json spec_to_json(const OpenBookSpec& spec) {
  Json mono{{"h1_matrix", matrix_to_json(spec.monodromy.matrix)}};
  if (spec.monodromy.arc_variation.rows() > 0 || spec.monodromy.arc_variation.cols() > 0)
    mono["arc_variation"] = matrix_to_json(spec.monodromy.arc_variation);
  if (spec.pants_data) {
    Json moves = Json::array();
    for (const auto& m : spec.pants_data->moves) moves.push_back(move_to_json(m));
    Json closure = Json::object();
    for (const auto& [from, to] : spec.pants_data->closure) closure[std::to_string(from.value)] = to.value;
    mono["pants_path"] = Json{{"start", decomposition_to_json(spec.pants_data->start)},
                              {"moves", moves},
                              {"closure", closure}};
  }
  return Json{{"name", spec.name},
              {"page", sig_to_json(spec.page)},
              {"monodromy", mono},
              {"options", {{"degenerate_path_convention", spec.degenerate_path_convention}}}};
}

Json group_to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(big_to_json(t));
  // Free summands appear as 0 factors, the diagonal convention of the SNF.
  Json factors = torsion;
  for (int i = 0; i < g.free_rank; ++i) factors.push_back(0);
  return Json{{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"invariant_factors", factors},
              {"min_generators", min_generators(g)},
              {"text", to_string(g)}};
}

Json complex_to_json(const TribranchedComplex& tc) {
  Json branches = Json::array();
  for (std::size_t i = 0; i < tc.branches.size(); ++i) {
    const auto& b = tc.branches[i];
    Json curves = Json::array();
    for (const auto& c : b.curves) curves.push_back(c.value);
    Json jb{{"id", i}, {"type", to_string(b.type)}, {"sig", sig_to_json(b.sig)}, {"level", b.level},
            {"curves", curves}};
    if (b.type == BranchType::TorusAnnulus) jb["boundary_label"] = b.boundary_label;
    branches.push_back(jb);
  }
  Json circles = Json::array();
  for (std::size_t i = 0; i < tc.circles.size(); ++i) {
    const auto& c = tc.circles[i];
    Json germs = Json::array();
    for (const auto& g : c.germs) germs.push_back(Json::array({g.branch, g.slot}));
    Json jc{{"id", i}, {"type", to_string(c.type)}, {"level", c.level}, {"germs", germs}};
    if (c.type == CircleType::Spine) {
      jc["boundary_label"] = c.boundary_label;
    } else {
      jc["curve"] = c.curve.value;
    }
    circles.push_back(jc);
  }
  Json blocks = Json::array();
  for (std::size_t i = 0; i < tc.blocks.size(); ++i) {
    const auto& b = tc.blocks[i];
    Json jb{{"id", i}, {"pi1_rank_bound", b.pi1_rank_bound}};
    if (b.type == BlockType::Product) {
      jb["type"] = "Product";
      jb["base"] = sig_to_json(b.base);
      jb["level"] = b.level;
    } else {
      jb["type"] = "SolidTorus";
      jb["boundary_label"] = b.boundary_label;
    }
    blocks.push_back(jb);
  }
  Json incidences = Json::array();
  for (const auto& inc : tc.incidences) incidences.push_back(Json::array({inc.branch, inc.side, inc.block}));
  return Json{{"construction", to_string(tc.construction)},
              {"page", sig_to_json(tc.page)},
              {"levels", tc.levels},
              {"degenerate_convention_used", tc.degenerate_convention_used},
              {"branches", branches},
              {"circles", circles},
              {"blocks", blocks},
              {"incidences", incidences}};
}

Json inventory_to_json(const TribranchedComplex& tc) {
  Json by_type = Json::object();
  for (const auto& b : tc.branches) {
    const auto key = to_string(b.type);
    by_type[key] = by_type.value(key, 0) + 1;
  }
  int product = 0;
  int solid = 0;
  for (const auto& b : tc.blocks) (b.type == BlockType::Product ? product : solid)++;
  return Json{{"branches", tc.branches.size()},
              {"blocks", tc.blocks.size()},
              {"circles", tc.circles.size()},
              {"levels", tc.levels},
              {"branches_by_type", by_type},
              {"blocks_by_type", {{"Product", product}, {"SolidTorus", solid}}},
              {"connected", tc.connected()},
              {"degenerate_convention_used", tc.degenerate_convention_used}};
}

Json essentiality_to_json(const EssentialityReport& rep) {
  Json conditions = Json::array();
  for (const auto& c : rep.conditions)
    conditions.push_back({{"condition", c.number},
                          {"statement", c.statement},
                          {"status", to_string(c.status)},
                          {"witness", c.witness}});
  return Json{{"conditions", conditions}, {"verdict", to_string(rep.verdict)}};
}

Json certificate_to_json(const RankCertificate& cert) {
  return Json{{"h1", group_to_json(cert.h1)},
              {"lower_bound", cert.lower_bound},
              {"verdict", to_string(cert.verdict)},
              {"statement", cert.statement}};
}

Json validation_to_json(const ValidationReport& rep) {
  Json out = Json::array();
  for (const auto& v : rep.violations) out.push_back({{"check", v.check}, {"message", v.message}});
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace tribranch
