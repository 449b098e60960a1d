#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "ybx/census.hpp"
#include "ybx/cross.hpp"
#include "ybx/error.hpp"
#include "ybx/hopf.hpp"
#include "ybx/json_io.hpp"
#include "ybx/linear.hpp"
#include "ybx/matrix.hpp"
#include "ybx/rep.hpp"
#include "ybx/set_maps.hpp"
#include "ybx/words.hpp"

namespace {

using namespace ybx;

// Structural problems (malformed or out-of-contract inputs) exit 2; failed
// mathematical properties exit 1, matching check failures.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Incompatible:
    case ErrorCode::NotInvertible:
    case ErrorCode::NotASolution:
    case ErrorCode::Degenerate:
    case ErrorCode::NotInvertibleInAlgebra:
    case ErrorCode::NotBijective:
    case ErrorCode::Singular:
    case ErrorCode::NotAGroup:
      return 1;
    default:
      return 2;
  }
}

struct Ctx {
  int jobs = 1;
  bool quiet = false;
  std::uint64_t seed = kDefaultSeed;
  Json invocation = Json::object();
  std::vector<std::string> canonical_inputs;
  std::vector<NamedReport> checks;
  Json extras = Json::object();

  Json load(const std::string& path) {
    Json j = read_json_file(path);
    canonical_inputs.push_back(canonical_json(j));
    return j;
  }

  void param(const std::string& key, Json value) { invocation[key] = std::move(value); }

  void add(std::string name, CheckReport report) {
    checks.push_back({std::move(name), std::move(report)});
  }

  bool all_passed() const {
    for (const NamedReport& c : checks)
      if (!c.report.passed()) return false;
    return true;
  }
};

int leg_dim(const Mat& m, const char* what) {
  if (m.rows != m.cols)
    fail(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows))));
  while (d * d < m.rows) ++d;
  while (d > 0 && d * d > m.rows) --d;
  if (d <= 0 || d * d != m.rows)
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + " size " + std::to_string(m.rows) + " is not d*d");
  return d;
}

Mat unit_outer(const HopfData& left, const HopfData& right) {
  Mat r(left.dim, right.dim);
  for (int i = 0; i < left.dim; ++i)
    for (int j = 0; j < right.dim; ++j) r.at(i, j) = left.unit[i] * right.unit[j];
  return r;
}

HopfData hopf_input(Ctx& ctx, const std::string& path, bool dual) {
  const Json j = ctx.load(path);
  const std::string kind = json_kind(j);
  if (kind == "hopf") return hopf_from_json(j);
  if (kind == "group") {
    const GroupTable g = group_from_json(j);
    return dual ? dual_group_algebra(g) : group_algebra(g);
  }
  fail(ErrorCode::ParseError, "expected kind \"hopf\" or \"group\", found \"" + kind + "\"");
}

// Accepts canonical family names (with --n) and digit-suffixed shorthands
// such as "y3" or "vp4".
std::pair<std::string, int> presentation_name(const std::string& raw, int n_option) {
  static const std::vector<std::string> canonical = {"bn", "vbn", "vpn", "hn", "yn"};
  for (const std::string& name : canonical)
    if (raw == name) {
      if (n_option <= 0)
        fail(ErrorCode::ParseError, "--n is required with presentation \"" + raw + "\"");
      return {raw, n_option};
    }
  size_t digits = 0;
  while (digits < raw.size() && std::isdigit(static_cast<unsigned char>(raw[raw.size() - 1 - digits])))
    ++digits;
  if (digits > 0 && digits < raw.size()) {
    const std::string prefix = raw.substr(0, raw.size() - digits);
    const int n = std::stoi(raw.substr(raw.size() - digits));
    static const std::vector<std::pair<std::string, std::string>> prefixes = {
        {"b", "bn"}, {"vb", "vbn"}, {"vp", "vpn"}, {"h", "hn"}, {"y", "yn"}};
    for (const auto& [p, name] : prefixes)
      if (prefix == p) {
        if (n_option > 0 && n_option != n)
          fail(ErrorCode::ParseError, "--n disagrees with presentation \"" + raw + "\"");
        return {name, n};
      }
  }
  fail(ErrorCode::UnsupportedName, "unknown presentation \"" + raw + "\"");
}

std::string direction_note(ConvertDirection d) {
  return d == ConvertDirection::yb_to_braid ? "yb-to-braid" : "braid-to-yb";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for braided set maps, extensions, r-matrices, Hopf data and strand-word calculus"};
  app.require_subcommand(1);

  Ctx ctx;
  app.add_option("--jobs", ctx.jobs, "worker threads for sweeps")->envname("YBX_JOBS");
  app.add_flag("--quiet", ctx.quiet, "suppress all output, keep the exit code");
  app.add_option("--seed", ctx.seed, "seed recorded in the report (sweeps are exhaustive)");

  std::function<void()> runner;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // --- check-ybe / check-braid -------------------------------------------
  struct {
    std::string file, out;
  } ybe_opt, braid_opt;
  {
    CLI::App* s = sub("check-ybe", "check a set map against the three-position equation");
    s->add_option("file", ybe_opt.file, "set_yb JSON")->required();
    s->add_option("--out", ybe_opt.out, "write the report JSON here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "check-ybe");
        const FiniteYBMap m = yb_map_from_json(ctx.load(ybe_opt.file));
        ctx.add("ybe", check_ybe(m));
      };
    });
  }
  {
    CLI::App* s = sub("check-braid", "check a set map against the braid relation");
    s->add_option("file", braid_opt.file, "set_yb JSON")->required();
    s->add_option("--out", braid_opt.out, "write the report JSON here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "check-braid");
        const FiniteYBMap m = yb_map_from_json(ctx.load(braid_opt.file));
        ctx.add("braid", check_braid(m));
      };
    });
  }

  // --- convert ------------------------------------------------------------
  struct {
    std::string file, out, direction = "yb-to-braid";
  } conv_opt;
  {
    CLI::App* s = sub("convert", "compose with the factor swap to switch equation forms");
    s->add_option("file", conv_opt.file, "set_yb JSON")->required();
    s->add_option("--direction", conv_opt.direction, "yb-to-braid (default) or braid-to-yb")
        ->check(CLI::IsMember({"yb-to-braid", "braid-to-yb"}));
    s->add_option("--out", conv_opt.out, "write the converted map here");
    s->callback([&] {
      runner = [&] {
        const ConvertDirection d = conv_opt.direction == "yb-to-braid"
                                       ? ConvertDirection::yb_to_braid
                                       : ConvertDirection::braid_to_yb;
        ctx.param("subcommand", "convert");
        ctx.param("direction", direction_note(d));
        const FiniteYBMap m = yb_map_from_json(ctx.load(conv_opt.file));
        ctx.extras["result"] = yb_map_to_json(convert(m, d));
      };
    });
  }

  // --- quandle ------------------------------------------------------------
  struct {
    std::string op, group, out;
  } quandle_opt;
  {
    CLI::App* s = sub("quandle", "self-distributivity check and the induced braiding");
    s->add_option("--op", quandle_opt.op, "binop JSON");
    s->add_option("--group", quandle_opt.group, "group JSON (conjugation operation)");
    s->add_option("--out", quandle_opt.out, "write the braiding here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "quandle");
        if (quandle_opt.op.empty() == quandle_opt.group.empty())
          fail(ErrorCode::ParseError, "give exactly one of --op, --group");
        BinaryOpTable op;
        if (!quandle_opt.group.empty()) {
          ctx.param("source", "group");
          op = conjugation_quandle(group_from_json(ctx.load(quandle_opt.group)));
        } else {
          ctx.param("source", "op");
          op = binop_from_json(ctx.load(quandle_opt.op));
        }
        ctx.add("self_distributive", check_self_distributive(op));
        const FiniteYBMap s_map = braiding_from_sd(op);
        ctx.add("braid", check_braid(s_map));
        ctx.extras["result"] = yb_map_to_json(s_map);
      };
    });
  }

  // --- guitar ---------------------------------------------------------------
  struct {
    std::string file, out;
  } guitar_opt;
  {
    CLI::App* s = sub("guitar", "derived solution of a left-nondegenerate solution");
    s->add_option("file", guitar_opt.file, "set_yb JSON")->required();
    s->add_option("--out", guitar_opt.out, "write the derived map here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "guitar");
        const FiniteYBMap m = yb_map_from_json(ctx.load(guitar_opt.file));
        const auto [left, right] = nondegeneracy(m);
        CheckReport nd;
        nd.info.emplace_back("left_nondegenerate", left);
        nd.info.emplace_back("right_nondegenerate", right);
        ctx.add("nondegeneracy", nd);
        const FiniteYBMap image = guitar_map(m);
        ctx.add("ybe_image", check_ybe(image));
        ctx.extras["result"] = yb_map_to_json(image);
      };
    });
  }

  // --- extend ---------------------------------------------------------------
  struct {
    std::string rb, rc, cross, out;
    bool braid = false;
    bool derived = false;
  } ext_opt;
  {
    CLI::App* s = sub("extend", "glue two solutions along a compatible cross map");
    s->add_option("--rb", ext_opt.rb, "set_yb JSON")->required();
    s->add_option("--rc", ext_opt.rc, "set_yb JSON")->required();
    s->add_option("--cross", ext_opt.cross, "cross JSON")->required();
    s->add_flag("--braid", ext_opt.braid, "treat inputs as braid-form solutions");
    s->add_flag("--derived", ext_opt.derived, "also check the ten derived relations");
    s->add_option("--out", ext_opt.out, "write the extension here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "extend");
        ctx.param("braid", ext_opt.braid);
        ctx.param("derived", ext_opt.derived);
        const FiniteYBMap rb = yb_map_from_json(ctx.load(ext_opt.rb));
        const FiniteYBMap rc = yb_map_from_json(ctx.load(ext_opt.rc));
        const CrossMap cross = cross_from_json(ctx.load(ext_opt.cross));
        if (ext_opt.braid) {
          const FiniteYBMap ext = build_braid_extension(rb, rc, cross);
          ctx.add("braid_extension", check_braid(ext));
          ctx.extras["result"] = extension_to_json(ext, rb.size, rc.size);
        } else {
          const CheckReport compat = check_cross_compat(rb, rc, cross);
          ctx.add("compat", compat);
          if (compat.passed()) {
            const FiniteYBMap ext = build_extension(rb, rc, cross);
            ctx.add("ybe_extension", check_ybe(ext));
            if (ext_opt.derived) ctx.add("derived", check_derived_relations(rb, rc, cross));
            ctx.extras["result"] = extension_to_json(ext, rb.size, rc.size);
          }
        }
      };
    });
  }

  // --- search-cross ----------------------------------------------------------
  struct {
    std::string rb, rc, out;
    bool invertible = false;
  } sc_opt;
  {
    CLI::App* s = sub("search-cross", "enumerate all compatible cross maps");
    s->add_option("--rb", sc_opt.rb, "set_yb JSON")->required();
    s->add_option("--rc", sc_opt.rc, "set_yb JSON")->required();
    s->add_flag("--invertible", sc_opt.invertible, "bijective cross maps only");
    s->add_option("--out", sc_opt.out, "write the list here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "search-cross");
        ctx.param("invertible", sc_opt.invertible);
        const FiniteYBMap rb = yb_map_from_json(ctx.load(sc_opt.rb));
        const FiniteYBMap rc = yb_map_from_json(ctx.load(sc_opt.rc));
        const std::vector<CrossMap> found = search_cross_maps(rb, rc, sc_opt.invertible);
        Json items = Json::array();
        for (const CrossMap& c : found) {
          Json item = cross_to_json(c);
          item["invertible"] = c.invertible;
          items.push_back(std::move(item));
        }
        ctx.extras["result"] =
            Json{{"kind", "cross_list"}, {"count", found.size()}, {"items", std::move(items)}};
      };
    });
  }

  // --- twist -----------------------------------------------------------------
  struct {
    std::string rb, rc, cross, t, f, phi, psi;
  } twist_opt;
  {
    CLI::App* s = sub("twist", "twist-data relations and the twisted braid check");
    s->add_option("--rb", twist_opt.rb, "set_yb JSON (extension mode)");
    s->add_option("--rc", twist_opt.rc, "set_yb JSON (extension mode)");
    s->add_option("--cross", twist_opt.cross, "cross JSON (extension mode)");
    s->add_option("--t", twist_opt.t, "set_yb JSON (direct mode)");
    s->add_option("--f", twist_opt.f, "set_yb JSON (direct mode)");
    s->add_option("--phi", twist_opt.phi, "mapping JSON on the threefold product");
    s->add_option("--psi", twist_opt.psi, "mapping JSON on the threefold product");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "twist");
        if (!twist_opt.cross.empty()) {
          ctx.param("mode", "extension");
          const FiniteYBMap rb = yb_map_from_json(ctx.load(twist_opt.rb));
          const FiniteYBMap rc = yb_map_from_json(ctx.load(twist_opt.rc));
          const CrossMap cross = cross_from_json(ctx.load(twist_opt.cross));
          const SetTwistData d = make_extension_twist(rb, rc, cross);
          ctx.add("twist", check_set_twist(d.t, d.f, d.phi, d.psi));
        } else {
          ctx.param("mode", "direct");
          if (twist_opt.t.empty() || twist_opt.f.empty() || twist_opt.phi.empty() ||
              twist_opt.psi.empty())
            fail(ErrorCode::ParseError,
                 "give --rb/--rc/--cross, or all of --t/--f/--phi/--psi");
          const FiniteYBMap t = yb_map_from_json(ctx.load(twist_opt.t));
          const FiniteYBMap f = yb_map_from_json(ctx.load(twist_opt.f));
          const SetMapping phi = mapping_from_json(ctx.load(twist_opt.phi));
          const SetMapping psi = mapping_from_json(ctx.load(twist_opt.psi));
          ctx.add("twist", check_set_twist(t, f, phi.table, psi.table));
        }
      };
    });
  }

  // --- cybe / qybe -------------------------------------------------------------
  struct {
    std::string file, out;
  } cybe_opt, qybe_opt;
  {
    CLI::App* s = sub("cybe", "classical equation for a matrix on V (x) V");
    s->add_option("file", cybe_opt.file, "matrix JSON")->required();
    s->add_option("--out", cybe_opt.out, "write the report JSON here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "cybe");
        const Mat r = matrix_from_json(ctx.load(cybe_opt.file));
        const int dim = leg_dim(r, "r-matrix");
        ctx.param("dim", dim);
        ctx.add("cybe", check_cybe(r, dim));
      };
    });
  }
  {
    CLI::App* s = sub("qybe", "quantum equation for a matrix on V (x) V");
    s->add_option("file", qybe_opt.file, "matrix JSON")->required();
    s->add_option("--out", qybe_opt.out, "write the report JSON here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "qybe");
        const Mat r = matrix_from_json(ctx.load(qybe_opt.file));
        const int dim = leg_dim(r, "R-matrix");
        ctx.param("dim", dim);
        ctx.add("qybe", check_qybe(r, dim));
      };
    });
  }

  // --- classical-extend / quantum-extend ---------------------------------------
  struct {
    std::string rb, rc, cross, out;
  } cle_opt, qe_opt;
  {
    CLI::App* s = sub("classical-extend", "combined classical r-matrix on the pair space");
    s->add_option("--rb", cle_opt.rb, "matrix JSON on B (x) B")->required();
    s->add_option("--rc", cle_opt.rc, "matrix JSON on C (x) C")->required();
    s->add_option("--cross", cle_opt.cross, "matrix JSON on C (x) B")->required();
    s->add_option("--out", cle_opt.out, "write the combined matrix here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "classical-extend");
        const Mat rb = matrix_from_json(ctx.load(cle_opt.rb));
        const Mat rc = matrix_from_json(ctx.load(cle_opt.rc));
        const Mat r = matrix_from_json(ctx.load(cle_opt.cross));
        const int db = leg_dim(rb, "rb");
        const int dc = leg_dim(rc, "rc");
        if (r.rows != dc * db || r.cols != dc * db)
          fail(ErrorCode::DimensionMismatch, "cross matrix must act on C (x) B");
        ctx.add("cybe_b", check_cybe(rb, db));
        ctx.add("cybe_c", check_cybe(rc, dc));
        const CheckReport compat = check_classical_compat(rb, rc, r, db, dc);
        ctx.add("compat", compat);
        if (ctx.all_passed()) {
          const Mat ext = build_classical_extension(rb, rc, r, db, dc);
          ctx.add("cybe_extension", check_cybe(ext, db * dc));
          ctx.extras["result"] = matrix_to_json(ext);
        }
      };
    });
  }
  {
    CLI::App* s = sub("quantum-extend", "combined R-matrix on the pair space");
    s->add_option("--rb", qe_opt.rb, "matrix JSON on B (x) B")->required();
    s->add_option("--rc", qe_opt.rc, "matrix JSON on C (x) C")->required();
    s->add_option("--cross", qe_opt.cross, "matrix JSON on C (x) B")->required();
    s->add_option("--out", qe_opt.out, "write the combined matrix here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "quantum-extend");
        const Mat rb = matrix_from_json(ctx.load(qe_opt.rb));
        const Mat rc = matrix_from_json(ctx.load(qe_opt.rc));
        const Mat r = matrix_from_json(ctx.load(qe_opt.cross));
        const int db = leg_dim(rb, "RB");
        const int dc = leg_dim(rc, "RC");
        if (r.rows != dc * db || r.cols != dc * db)
          fail(ErrorCode::DimensionMismatch, "cross matrix must act on C (x) B");
        ctx.add("qybe_b", check_qybe(rb, db));
        ctx.add("qybe_c", check_qybe(rc, dc));
        const CheckReport compat = check_quantum_compat(rb, rc, r, db, dc);
        ctx.add("compat", compat);
        if (ctx.all_passed()) {
          const Mat ext = build_quantum_extension(rb, rc, r, db, dc);
          ctx.add("qybe_extension", check_qybe(ext, db * dc));
          ctx.extras["result"] = matrix_to_json(ext);
        }
      };
    });
  }

  // --- hopf-check ---------------------------------------------------------------
  struct {
    std::string file, out;
    bool dual = false;
  } hc_opt;
  {
    CLI::App* s = sub("hopf-check", "seven structure axioms for Hopf data");
    s->add_option("file", hc_opt.file, "hopf or group JSON")->required();
    s->add_flag("--dual", hc_opt.dual, "for group input, use the function algebra");
    s->add_option("--out", hc_opt.out, "write the Hopf data here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "hopf-check");
        ctx.param("dual", hc_opt.dual);
        const HopfData h = hopf_input(ctx, hc_opt.file, hc_opt.dual);
        ctx.add("axioms", check_hopf_axioms(h));
        ctx.extras["result"] = hopf_to_json(h);
      };
    });
  }

  // --- hopf-product ----------------------------------------------------------------
  struct {
    std::string b, c, r, rb, rc, out, convention = "standard";
    bool dual_b = false, dual_c = false;
  } hp_opt;
  {
    CLI::App* s = sub("hopf-product", "product Hopf data twisted by a cross element");
    s->add_option("--b", hp_opt.b, "hopf or group JSON")->required();
    s->add_option("--c", hp_opt.c, "hopf or group JSON")->required();
    s->add_option("--r", hp_opt.r, "elem2 JSON in C (x) B (default: unit (x) unit)");
    s->add_option("--rb", hp_opt.rb, "elem2 JSON in B (x) B for the combined element");
    s->add_option("--rc", hp_opt.rc, "elem2 JSON in C (x) C for the combined element");
    s->add_flag("--dual-b", hp_opt.dual_b, "group input b as function algebra");
    s->add_flag("--dual-c", hp_opt.dual_c, "group input c as function algebra");
    s->add_option("--convention", hp_opt.convention, "standard (default) or reversed")
        ->check(CLI::IsMember({"standard", "reversed"}));
    s->add_option("--out", hp_opt.out, "write the product Hopf data here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "hopf-product");
        ctx.param("convention", hp_opt.convention);
        ctx.param("dual_b", hp_opt.dual_b);
        ctx.param("dual_c", hp_opt.dual_c);
        const HopfData b = hopf_input(ctx, hp_opt.b, hp_opt.dual_b);
        const HopfData c = hopf_input(ctx, hp_opt.c, hp_opt.dual_c);
        const Mat r =
            hp_opt.r.empty() ? unit_outer(c, b) : elem2_from_json(ctx.load(hp_opt.r));
        if (r.rows != c.dim || r.cols != b.dim)
          fail(ErrorCode::DimensionMismatch, "cross element must live in C (x) B");
        const CheckReport cross = check_cross_element(b, c, r);
        ctx.add("cross_element", cross);
        if (!cross.passed()) return;
        const HopfData w = build_product_hopf(b, c, r);
        ctx.add("axioms", check_hopf_axioms(w));
        const Mat rb =
            hp_opt.rb.empty() ? unit_outer(b, b) : elem2_from_json(ctx.load(hp_opt.rb));
        const Mat rc =
            hp_opt.rc.empty() ? unit_outer(c, c) : elem2_from_json(ctx.load(hp_opt.rc));
        const Mat big = product_r_element(b, c, r, rb, rc);
        const QTConvention conv = hp_opt.convention == "standard" ? QTConvention::standard
                                                                 : QTConvention::reversed;
        ctx.add("quasitriangular", check_quasitriangular(w, big, conv));
        ctx.extras["result"] = hopf_to_json(w);
        ctx.extras["r_element"] = elem2_to_json(big);
      };
    });
  }

  // --- rep-check -----------------------------------------------------------------
  struct {
    std::string presentation, solution, rb, rc, cross;
    int n = 0;
  } rep_opt;
  {
    CLI::App* s = sub("rep-check", "verify relators under a permutation assignment");
    s->add_option("--presentation", rep_opt.presentation, "bn, vbn, vpn, hn, yn (or e.g. y3, vp4)")
        ->required();
    s->add_option("--n", rep_opt.n, "rank");
    s->add_option("--solution", rep_opt.solution, "set_yb JSON driving the images");
    s->add_option("--rb", rep_opt.rb, "set_yb JSON (rank-3 mixed family)");
    s->add_option("--rc", rep_opt.rc, "set_yb JSON (rank-3 mixed family)");
    s->add_option("--cross", rep_opt.cross, "cross JSON (rank-3 mixed family)");
    s->callback([&] {
      runner = [&] {
        const auto [name, n] = presentation_name(rep_opt.presentation, rep_opt.n);
        ctx.param("subcommand", "rep-check");
        ctx.param("presentation", name);
        ctx.param("n", n);
        const Presentation p = presentation(name, n);
        if (name == "yn" && !rep_opt.cross.empty()) {
          ctx.param("route", "direct");
          if (n != 3)
            fail(ErrorCode::BadN, "direct images for the mixed family exist at rank 3");
          const FiniteYBMap rb = yb_map_from_json(ctx.load(rep_opt.rb));
          const FiniteYBMap rc = yb_map_from_json(ctx.load(rep_opt.rc));
          const CrossMap cross = cross_from_json(ctx.load(rep_opt.cross));
          ctx.add("relators", check_assignment(p, y3_assignment(rb, rc, cross)));
          return;
        }
        if (rep_opt.solution.empty())
          fail(ErrorCode::ParseError, "--solution is required for this presentation");
        const FiniteYBMap r = yb_map_from_json(ctx.load(rep_opt.solution));
        if (name == "yn") {
          // Images via the family homomorphism into the rank-2n flat family.
          ctx.param("route", "tau");
          const GeneratorAssignment a = rep_vp(r, 2 * n);
          CheckReport rep;
          for (const Word& relator : p.relators) {
            rep.relations_checked += 1;
            const std::vector<int> perm = evaluate_word(a, tau_yn(relator, n));
            for (size_t v = 0; v < perm.size(); ++v)
              if (perm[v] != static_cast<int>(v)) {
                rep.add_failure(word_string(relator), {static_cast<long long>(v)},
                                "image moves point " + std::to_string(v));
                break;
              }
          }
          ctx.add("relators", rep);
          return;
        }
        GeneratorAssignment a;
        if (name == "vpn")
          a = rep_vp(r, n);
        else if (name == "hn")
          a = rep_hn(r, n);
        else
          a = rep_vbn(r, n);  // bn relators use the same strand images
        ctx.add("relators", check_assignment(p, a));
      };
    });
  }

  // --- simplicial -------------------------------------------------------------------
  struct {
    std::string solution;
    int n = 3;
  } simp_opt;
  {
    CLI::App* s = sub("simplicial", "face/degeneracy identities under evaluation");
    s->add_option("--solution", simp_opt.solution, "set_yb JSON")->required();
    s->add_option("--n", simp_opt.n, "rank of the middle level (default 3)");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "simplicial");
        ctx.param("n", simp_opt.n);
        const FiniteYBMap r = yb_map_from_json(ctx.load(simp_opt.solution));
        ctx.add("simplicial", simplicial_check(r, simp_opt.n));
      };
    });
  }

  // --- doubling ---------------------------------------------------------------------
  struct {
    std::string word, out, family = "vp";
    int n = 0, k = 1;
    bool normalize = false;
  } dbl_opt;
  {
    CLI::App* s = sub("doubling", "cabling/doubling images of words");
    s->add_option("--word", dbl_opt.word, "word JSON")->required();
    s->add_option("--n", dbl_opt.n, "strand rank of the input word")->required();
    s->add_option("--k", dbl_opt.k, "extra copies per strand (vp family, default 1)");
    s->add_option("--family", dbl_opt.family, "vp (default) or bn")
        ->check(CLI::IsMember({"vp", "bn"}));
    s->add_flag("--normalize", dbl_opt.normalize, "sort commuting letters and reduce");
    s->add_option("--out", dbl_opt.out, "write the image word here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "doubling");
        ctx.param("family", dbl_opt.family);
        ctx.param("n", dbl_opt.n);
        ctx.param("k", dbl_opt.k);
        ctx.param("normalize", dbl_opt.normalize);
        const Word w = word_from_json(ctx.load(dbl_opt.word));
        Word image = dbl_opt.family == "vp" ? doubling_vp(w, dbl_opt.n, dbl_opt.k)
                                            : doubling_bn(w, dbl_opt.n);
        if (dbl_opt.normalize) image = free_reduce(normalize_commuting(image));
        ctx.extras["result"] = word_to_json(image);
        ctx.extras["result_string"] = word_string(image);
      };
    });
  }

  // --- census -----------------------------------------------------------------------
  struct {
    std::string equation = "ybe", out;
    int size = 2;
    bool invertible = false;
  } census_opt;
  {
    CLI::App* s = sub("census", "exhaustive solution sweep on a small set");
    s->add_option("--size", census_opt.size, "set size (capped at 3)")->required();
    s->add_option("--equation", census_opt.equation, "ybe (default) or braid")
        ->check(CLI::IsMember({"ybe", "braid"}));
    s->add_flag("--invertible", census_opt.invertible, "bijective maps only");
    s->add_option("--out", census_opt.out, "write the census here");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "census");
        ctx.param("size", census_opt.size);
        ctx.param("equation", census_opt.equation);
        ctx.param("invertible", census_opt.invertible);
        const Equation eq =
            census_opt.equation == "ybe" ? Equation::ybe : Equation::braid;
        const CensusResult c =
            census_solutions(census_opt.size, eq, census_opt.invertible, ctx.jobs);
        CheckReport rep;
        rep.relations_checked = c.candidates;
        rep.info.emplace_back("all_enumerated", true);
        ctx.add("census", rep);
        ctx.extras["census"] = census_to_json(c);
      };
    });
  }

  // --- counterexamples ----------------------------------------------------------------
  {
    CLI::App* s = sub("counterexamples", "three-strand negative controls");
    s->callback([&] {
      runner = [&] {
        ctx.param("subcommand", "counterexamples");
        ctx.add("counterexamples", b3_counterexamples());
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string out_path;
  int exit_code = 0;
  try {
    runner();
    // Locate the subcommand's --out value, if any.
    for (const CLI::App* s : app.get_subcommands())
      if (const CLI::Option* o = s->get_option_no_throw("--out"); o && o->count() > 0)
        out_path = o->as<std::string>();
    exit_code = ctx.all_passed() ? 0 : 1;
  } catch (const Error& e) {
    if (!ctx.quiet) std::cerr << e.what() << '\n';
    return exit_code_for(e.code());
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  RunReport report;
  std::vector<std::string> inputs = {canonical_json(ctx.invocation)};
  inputs.insert(inputs.end(), ctx.canonical_inputs.begin(), ctx.canonical_inputs.end());
  report = make_run_report(inputs);
  report.seed = ctx.seed;
  report.checks = ctx.checks;
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  Json out_json = run_report_to_json(report);
  out_json["invocation"] = ctx.invocation;
  for (const auto& [key, value] : ctx.extras.items()) out_json[key] = value;

  if (!out_path.empty()) {
    if (ctx.extras.contains("result"))
      write_json_file(out_path, ctx.extras["result"]);
    else if (ctx.extras.contains("census"))
      write_json_file(out_path, ctx.extras["census"]);
    else
      write_json_file(out_path, out_json);
  }
  if (!ctx.quiet) std::cout << out_json.dump(2) << '\n';
  return exit_code;
}
