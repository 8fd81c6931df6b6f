// Command-line surface for the symplectic blob algebra library. Every
// subcommand is deterministic given its flags (including --seed): reports
// carry a schema version, echo their configuration, and contain no
// timestamps, so identical invocations give byte-identical output.
//
// Exit codes: 0 = all assertions of the run hold; 1 = a verification
// failed (the report carries the counterexample); 2 = usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sba/algebra.hpp"
#include "sba/cells.hpp"
#include "sba/functors.hpp"
#include "sba/oracles.hpp"
#include "sba/phi.hpp"
#include "sba/poset.hpp"
#include "sba/quotients.hpp"
#include "sba/report.hpp"

using namespace sba;
using nlohmann::ordered_json;

namespace {

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

ParamKind parse_kind(const std::string& s) {
  if (s == "generic6") return ParamKind::Generic6;
  if (s == "blob") return ParamKind::Blob;
  if (s == "dn") return ParamKind::DN;
  if (s == "gmp") return ParamKind::GMP;
  throw CLI::ValidationError("--param", "expected generic6|blob|dn|gmp");
}

void emit_json(const RunConfig& cfg, ordered_json body) {
  body["config"] = cfg.to_json();
  std::fputs(dump_json(body).c_str(), stdout);
}

// Parses a report type's own JSON string and appends the config echo.
void emit_report_json(const RunConfig& cfg, const std::string& rep_json) {
  emit_json(cfg, ordered_json::parse(rep_json));
}

ordered_json base_body(const std::string& kind) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

// A reproducible all-units prime-field point for the given ring.
std::vector<std::uint64_t> seeded_point(const RingPtr& ring, std::uint64_t seed,
                                        std::uint64_t p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> u(2, p - 2);
  std::vector<std::uint64_t> pt;
  for (std::size_t i = 0; i < ring->nvars(); ++i) pt.push_back(u(rng));
  return pt;
}

int rank_with_retries(const Matrix& m, std::mt19937_64& rng, std::uint64_t p,
                      std::size_t vars, std::vector<std::uint64_t>* used) {
  std::uniform_int_distribution<std::uint64_t> u(2, p - 2);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<std::uint64_t> pt;
    for (std::size_t i = 0; i < vars; ++i) pt.push_back(u(rng));
    try {
      int r = rank_fp(eval_fp_matrix(m, pt, p), p);
      if (used) *used = pt;
      return r;
    } catch (const std::exception&) {
      continue;  // denominator vanished at this point; redraw
    }
  }
  throw std::runtime_error("no valid evaluation point found");
}

int cmd_basis(const RunConfig& cfg) {
  auto basis = enumerate_basis(cfg.n);
  if (cfg.format == "json") {
    ordered_json j = base_body("basis");
    j["n"] = cfg.n;
    j["count"] = basis.size();
    ordered_json ds = ordered_json::array();
    for (const auto& d : basis) ds.push_back(to_string(d));
    j["diagrams"] = ds;
    emit_json(cfg, j);
  } else if (cfg.format == "csv") {
    std::printf("index,diagram\n");
    for (std::size_t i = 0; i < basis.size(); ++i)
      std::printf("%zu,\"%s\"\n", i, to_string(basis[i]).c_str());
  } else {
    std::printf("basis diagrams at n=%d: %zu\n", cfg.n, basis.size());
    for (const auto& d : basis) std::printf("%s\n", to_string(d).c_str());
  }
  return 0;
}

int cmd_dim(const RunConfig& cfg) {
  std::size_t dim = dimension(cfg.n);
  std::vector<std::pair<int, std::size_t>> mods;
  std::size_t sq = 0;
  if (cfg.n <= 5) {
    ParamSet ps = Parametrization(ParamKind::Generic6).params(cfg.n);
    for (int l : cell_labels(cfg.n)) {
      std::size_t d = cell_module(cfg.n, l, ps).dim();
      mods.emplace_back(l, d);
      sq += d * d;
    }
  }
  if (cfg.format == "json") {
    ordered_json j = base_body("dim");
    j["n"] = cfg.n;
    j["dimension"] = dim;
    if (!mods.empty()) {
      ordered_json ms = ordered_json::array();
      for (auto [l, d] : mods) ms.push_back({{"label", l}, {"dim", d}});
      j["modules"] = ms;
      j["sum_of_squares"] = sq;
    }
    emit_json(cfg, j);
  } else if (cfg.format == "csv") {
    std::printf("label,dim\n");
    for (auto [l, d] : mods) std::printf("%d,%zu\n", l, d);
    std::printf("total,%zu\n", dim);
  } else {
    std::printf("%zu\n", dim);
    for (auto [l, d] : mods) std::printf("S(%d): %zu\n", l, d);
  }
  return (mods.empty() || sq == dim) ? 0 : 1;
}

int cmd_mult(const RunConfig& cfg) {
  const int n = cfg.n;
  ParamSet ps = Parametrization(ParamKind::Generic6).params(n);
  auto basis = enumerate_basis(n);
  const std::size_t N = basis.size();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, N - 1);

  std::size_t pair_checks = 0, filtration_violations = 0, closure_failures = 0;
  std::string first_failure;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    AlgElement prod = mul(basis[i], basis[j], ps);
    ++pair_checks;
    if (prod.terms.size() > 1) {
      ++closure_failures;
      if (first_failure.empty())
        first_failure = "product of " + to_string(basis[i]) + " and " +
                        to_string(basis[j]) + " is not a scaled diagram";
      return;
    }
    int bound = std::min(undecorated_propagating_count(basis[i]),
                         undecorated_propagating_count(basis[j]));
    for (const auto& [d, c] : prod.terms)
      if (undecorated_propagating_count(d) > bound) {
        ++filtration_violations;
        if (first_failure.empty())
          first_failure = "filtration raised by " + to_string(basis[i]) +
                          " * " + to_string(basis[j]);
      }
  };
  if (n <= 3) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) check_pair(i, j);
  } else {
    for (int t = 0; t < 10000; ++t) check_pair(pick(rng), pick(rng));
  }

  std::size_t triples = n <= 2 ? N * N * N : 2000;
  std::size_t assoc_checks = 0, assoc_failures = 0;
  auto unit = [&](const Diagram& d) {
    return AlgElement::of(d, Scalar::one(ps.ring()));
  };
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    AlgElement l = mul(mul(basis[i], basis[j], ps), unit(basis[k]), ps);
    AlgElement r = mul(unit(basis[i]), mul(basis[j], basis[k], ps), ps);
    ++assoc_checks;
    if (!(l == r)) {
      ++assoc_failures;
      if (first_failure.empty())
        first_failure = "associativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")";
    }
  };
  if (n <= 2) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) check_triple(i, j, k);
  } else {
    for (std::size_t t = 0; t < triples; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  if (!cfg.cache_dir.empty() && n <= 4) {
    StructureTable table(n, ps, cfg.cache_dir);
    table.compute_all();
    table.save();
  }

  bool ok = closure_failures == 0 && filtration_violations == 0 &&
            assoc_failures == 0;
  if (cfg.format == "json") {
    ordered_json j = base_body("mult");
    j["n"] = cfg.n;
    j["basis"] = N;
    j["pair_checks"] = pair_checks;
    j["closure_failures"] = closure_failures;
    j["filtration_violations"] = filtration_violations;
    j["associativity_checks"] = assoc_checks;
    j["associativity_failures"] = assoc_failures;
    j["ok"] = ok;
    if (!first_failure.empty()) j["counterexample"] = first_failure;
    emit_json(cfg, j);
  } else {
    std::printf("pairs checked: %zu, closure failures: %zu, filtration "
                "violations: %zu\n",
                pair_checks, closure_failures, filtration_violations);
    std::printf("associativity checks: %zu, failures: %zu\n", assoc_checks,
                assoc_failures);
    if (!first_failure.empty())
      std::printf("counterexample: %s\n", first_failure.c_str());
    std::printf("%s\n", ok ? "pass" : "FAIL");
  }
  return ok ? 0 : 1;
}

int cmd_gram(const RunConfig& cfg, ParamKind kind, int label) {
  Parametrization pz(kind);
  CellModule m = cell_module(cfg.n, label, pz.params(cfg.n));
  if (cfg.format == "json") {
    ordered_json j = base_body("gram-matrix");
    j["n"] = cfg.n;
    j["label"] = label;
    j["dimension"] = m.dim();
    j["symmetric"] = is_symmetric(m.gram);
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.gram) {
      ordered_json r = ordered_json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      rows.push_back(r);
    }
    j["matrix"] = rows;
    emit_json(cfg, j);
  } else {
    for (const auto& row : m.gram) {
      std::string line;
      for (const auto& x : row) {
        if (!line.empty()) line += cfg.format == "csv" ? "," : "  ";
        line += cfg.format == "csv" ? "\"" + x.to_string() + "\"" : x.to_string();
      }
      std::printf("%s\n", line.c_str());
    }
  }
  return 0;
}

int cmd_gram_det(const RunConfig& cfg, ParamKind kind, int label) {
  GramReport rep = gram_report(cfg.n, label, Parametrization(kind));
  if (cfg.format == "json") {
    emit_report_json(cfg, rep.to_json());
  } else if (cfg.format == "csv") {
    std::printf("n,label,dim,det,matched-formula,sign\n%s\n",
                rep.csv_row().c_str());
  } else {
    std::printf("n=%d label=%d dim=%zu\ndet = %s\n", rep.n, rep.label,
                rep.dimension, rep.determinant.to_string().c_str());
    for (const auto& m : rep.matched)
      std::printf("matches %s (sign %+d)\n", m.id.c_str(), m.sign);
    if (rep.matched.empty())
      std::printf("no candidate matched (%zu tried)\n", rep.tried.size());
  }
  // A determinant with known closed-form candidates must match one of them.
  return (rep.tried.empty() || !rep.matched.empty()) ? 0 : 1;
}

int cmd_cells(const RunConfig& cfg, ParamKind kind) {
  ParamSet ps = Parametrization(kind).params(cfg.n);
  auto classes = cell_partition(cfg.n, ps);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  bool ok = total == dimension(cfg.n);
  if (cfg.format == "json") {
    ordered_json j = base_body("cells");
    j["n"] = cfg.n;
    ordered_json cs = ordered_json::array();
    for (const auto& c : classes)
      cs.push_back({{"label", c.label},
                    {"phat", c.phat},
                    {"size", c.members.size()},
                    {"generator", to_string(c.generator)}});
    j["classes"] = cs;
    j["total"] = total;
    j["algebra_dim"] = dimension(cfg.n);
    j["ok"] = ok;
    emit_json(cfg, j);
  } else if (cfg.format == "csv") {
    std::printf("label,phat,size,generator\n");
    for (const auto& c : classes)
      std::printf("%d,%d,%zu,\"%s\"\n", c.label, c.phat, c.members.size(),
                  to_string(c.generator).c_str());
  } else {
    for (const auto& c : classes)
      std::printf("label %d: phat=%d size=%zu generator=%s\n", c.label, c.phat,
                  c.members.size(), to_string(c.generator).c_str());
    std::printf("total %zu of %zu\n", total, dimension(cfg.n));
  }
  return ok ? 0 : 1;
}

int cmd_poset(const RunConfig& cfg) {
  Poset chain = chain_poset(cfg.n), level = level_poset(cfg.n),
        coarse = coarse_poset(cfg.n);
  bool ok = refines(coarse, level) && refines(level, chain);
  if (cfg.format == "json") {
    ordered_json j = base_body("poset");
    j["n"] = cfg.n;
    auto covers_of = [](const Poset& p) {
      ordered_json cv;
      for (const auto& [x, ys] : p.covers) cv[std::to_string(x)] = ys;
      return cv;
    };
    j["chain"] = covers_of(chain);
    j["level"] = covers_of(level);
    j["coarse"] = covers_of(coarse);
    j["coarse_refined_by_level"] = refines(coarse, level);
    j["level_refined_by_chain"] = refines(level, chain);
    j["maximal"] = coarse.maximal();
    j["minimal"] = coarse.minimal();
    emit_json(cfg, j);
  } else {
    auto show = [](const char* name, const Poset& p) {
      std::printf("%s:\n", name);
      for (const auto& [x, ys] : p.covers) {
        std::string line = "  " + std::to_string(x) + " covers";
        for (int y : ys) line += " " + std::to_string(y);
        if (ys.empty()) line += " (nothing)";
        std::printf("%s\n", line.c_str());
      }
    };
    show("chain", chain);
    show("level", level);
    show("coarse", coarse);
    std::printf("coarse holds in level: %s; level holds in chain: %s\n",
                refines(coarse, level) ? "yes" : "no",
                refines(level, chain) ? "yes" : "no");
  }
  return ok ? 0 : 1;
}

int cmd_verify_presentation(const RunConfig& cfg) {
  std::size_t samples = cfg.n <= 3 ? 0 : 1000;
  IsoReport rep =
      verify_isomorphism(cfg.n, samples, static_cast<std::uint32_t>(cfg.seed));
  if (cfg.format == "json") {
    emit_report_json(cfg, rep.to_json());
  } else {
    std::printf("n=%d: %zu reduced monomials, %zu diagrams, bijection=%s, "
                "multiplicative=%s (%zu pairs)\n",
                rep.n, rep.monomial_count, rep.diagram_count,
                rep.bijection ? "yes" : "no",
                rep.multiplicative ? "yes" : "no", rep.pairs_checked);
    if (!rep.failure.empty())
      std::printf("counterexample: %s\n", rep.failure.c_str());
    std::printf("%s\n", rep.ok() ? "pass" : "FAIL");
  }
  return rep.ok() ? 0 : 1;
}

int cmd_verify_functors(const RunConfig& cfg) {
  Parametrization pz(ParamKind::Generic6);
  ParamSet ps = pz.params(cfg.n);
  const std::uint64_t p = 10007;
  auto point = seeded_point(ps.ring(), cfg.seed, p);
  ordered_json rows = ordered_json::array();
  bool ok = true;
  std::string failure;
  for (Corner c : {Corner::E, Corner::F}) {
    const char* corner = c == Corner::E ? "E" : "F";
    if (!(corner_params(corner_params(ps, c), c) == ps)) {
      ok = false;
      failure = std::string("corner parameter swap at ") + corner +
                " is not an involution";
    }
    for (int l : cell_labels(cfg.n)) {
      CellModule m = cell_module(cfg.n, l, ps);
      LocalisedModule lm = localise(m, c);
      ordered_json row;
      row["corner"] = corner;
      row["label"] = l;
      bool killed = localisation_kills(cfg.n, l, c);
      row["killed"] = killed;
      row["dim"] = lm.dim;
      if (killed) {
        if (lm.dim != 0) {
          ok = false;
          failure = "killed label " + std::to_string(l) + " at corner " +
                    corner + " has nonzero localisation";
        }
      } else {
        int ll = localised_label(cfg.n, l, c);
        row["localised_label"] = ll;
        row["globalises_back"] = globalised_label(ll, c) == l;
        CellModule target = cell_module(cfg.n - 1, ll, lm.ps);
        row["target_dim"] = target.dim();
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(l + 64));
        row["target_gram_rank"] =
            rank_with_retries(target.gram, rng, p, ps.ring()->nvars(),
                              nullptr);
        bool iso = lm.dim == target.dim() && isomorphic_fp(lm, target, point, p);
        row["isomorphic"] = iso;
        if (!iso || globalised_label(ll, c) != l) {
          ok = false;
          failure = "localisation of label " + std::to_string(l) +
                    " at corner " + corner + " does not match the predicted "
                    "standard module";
        }
      }
      rows.push_back(row);
    }
  }
  if (cfg.format == "json") {
    ordered_json j = base_body("functors");
    j["n"] = cfg.n;
    j["p"] = p;
    j["rows"] = rows;
    j["ok"] = ok;
    if (!failure.empty()) j["counterexample"] = failure;
    emit_json(cfg, j);
  } else {
    for (const auto& row : rows) {
      std::string line = row["corner"].get<std::string>() + " S(" +
                         std::to_string(row["label"].get<int>()) + "): ";
      if (row["killed"].get<bool>()) {
        line += "killed";
      } else {
        line += "-> S(" + std::to_string(row["localised_label"].get<int>()) +
                ") dim " + std::to_string(row["dim"].get<std::size_t>()) +
                (row["isomorphic"].get<bool>() ? " (isomorphic)"
                                               : " (NOT isomorphic)");
      }
      std::printf("%s\n", line.c_str());
    }
    std::printf("%s\n", ok ? "pass" : "FAIL");
    if (!failure.empty()) std::printf("counterexample: %s\n", failure.c_str());
  }
  return ok ? 0 : 1;
}

int cmd_verify_quotient(const RunConfig& cfg) {
  std::size_t samples = cfg.n <= 3 ? 0 : 1500;
  QuotientReport rep = cfg.n % 2 == 1
                           ? verify_odd_quotient(cfg.n, samples, cfg.seed)
                           : verify_even_quotient(cfg.n, samples, cfg.seed);
  auto cex = generic_strip_counterexample(std::min(cfg.n, 3));
  if (cfg.format == "json") {
    ordered_json j = ordered_json::parse(rep.to_json());
    ordered_json g;
    g["found"] = cex.has_value();
    if (cex) {
      g["n"] = cex->n;
      g["x"] = to_string(cex->x);
      g["y"] = to_string(cex->y);
      g["detail"] = cex->detail;
    }
    j["generic_counterexample"] = g;
    emit_json(cfg, j);
  } else {
    std::printf("%s quotient at n=%d: multiplicative=%s, %zu pairs, image "
                "%zu (expected %zu), kernel %zu\n",
                rep.locus.c_str(), rep.n, rep.multiplicative ? "yes" : "no",
                rep.checked_pairs, rep.image_dim, rep.expected_image_dim,
                rep.kernel_dim);
    std::printf("note: %s\n", rep.note.c_str());
    if (cex)
      std::printf("generic counterexample at n=%d: x=%s y=%s (%s)\n", cex->n,
                  to_string(cex->x).c_str(), to_string(cex->y).c_str(),
                  cex->detail.c_str());
    std::printf("%s\n", rep.ok ? "pass" : "FAIL");
  }
  return rep.ok ? 0 : 1;
}

int cmd_decomp(const RunConfig& cfg, ParamKind kind, bool has_label, int label,
               int way) {
  Parametrization pz(kind);
  ParamSet ps = pz.params(cfg.n);
  const std::uint64_t p = 10007;
  std::vector<int> labels;
  if (has_label)
    labels.push_back(label);
  else
    labels = cell_labels(cfg.n);
  ordered_json rows = ordered_json::array();
  bool ok = true;
  std::vector<std::string> text_rows;
  for (int l : labels) {
    CellModule m = cell_module(cfg.n, l, ps);
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::uint64_t> pt;
    int rank = rank_with_retries(m.gram, rng, p, ps.ring()->nvars(), &pt);
    ordered_json row;
    row["label"] = l;
    row["dim"] = m.dim();
    row["gram_rank"] = rank;
    std::string t = "S(" + std::to_string(l) + "): dim " +
                    std::to_string(m.dim()) + ", simple head " +
                    std::to_string(rank);
    if (way != 0) {
      CellModule r = cell_module(cfg.n, l, rescale(ps, way));
      // The rescaled form must have the same rank at the same point.
      int rank2;
      try {
        rank2 = rank_fp(eval_fp_matrix(r.gram, pt, p), p);
      } catch (const std::exception&) {
        std::mt19937_64 rng2(cfg.seed);
        rank2 = rank_with_retries(r.gram, rng2, p, ps.ring()->nvars(),
                                  nullptr);
      }
      row["rescaled_rank"] = rank2;
      row["rank_preserved"] = rank2 == rank;
      if (rank2 != rank) ok = false;
      t += ", rescaled " + std::to_string(rank2) +
           (rank2 == rank ? " (preserved)" : " (MISMATCH)");
    }
    rows.push_back(row);
    text_rows.push_back(t);
  }
  if (cfg.format == "json") {
    ordered_json j = base_body("decomp");
    j["n"] = cfg.n;
    j["p"] = p;
    if (way != 0) j["way"] = way;
    j["rows"] = rows;
    j["ok"] = ok;
    emit_json(cfg, j);
  } else if (cfg.format == "csv") {
    std::printf(way != 0 ? "n,label,dim,rank,rescaled,preserved\n"
                         : "n,label,dim,rank\n");
    for (const auto& row : rows) {
      if (way != 0)
        std::printf("%d,%d,%zu,%d,%d,%s\n", cfg.n, row["label"].get<int>(),
                    row["dim"].get<std::size_t>(), row["gram_rank"].get<int>(),
                    row["rescaled_rank"].get<int>(),
                    row["rank_preserved"].get<bool>() ? "yes" : "no");
      else
        std::printf("%d,%d,%zu,%d\n", cfg.n, row["label"].get<int>(),
                    row["dim"].get<std::size_t>(), row["gram_rank"].get<int>());
    }
  } else {
    for (const auto& t : text_rows) std::printf("%s\n", t.c_str());
    if (way != 0) std::printf("%s\n", ok ? "pass" : "FAIL");
  }
  return ok ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg) {
  OracleReport rep = run_oracles();
  if (cfg.format == "json") {
    emit_report_json(cfg, rep.to_json());
  } else {
    for (const auto& c : rep.checks)
      std::printf("%-28s %s%s%s\n", c.id.c_str(), c.pass ? "pass" : "FAIL",
                  c.detail.empty() ? "" : "  ", c.detail.c_str());
    std::printf("%zu checks, %s\n", rep.checks.size(),
                rep.ok() ? "all pass" : "FAILURES");
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the symplectic blob algebra"};
  app.require_subcommand(1);

  int n = 2;
  int label = 0;
  std::string param;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string cache_dir;
  int way = 0;

  // Shared flags are registered on each subcommand so they can appear after
  // the subcommand name.
  std::vector<CLI::App*> subs;
  CLI::Option* label_opt = nullptr;
  auto add = [&](const std::string& name, const std::string& desc,
                 bool with_label = false) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("--n", n, "rank")->check(CLI::Range(1, 8));
    if (with_label) {
      CLI::Option* o = s->add_option("--label", label, "cell label");
      if (!label_opt) label_opt = o;
      if (name == "gram" || name == "gram-det") o->required();
    }
    s->add_option("--param", param,
                  "parametrization: generic6|blob|dn|gmp");
    s->add_option("--seed", seed, "seed for randomized choices");
    s->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--cache-dir", cache_dir, "product table cache directory");
    subs.push_back(s);
    return s;
  };

  CLI::App* basis = add("basis", "list the diagram basis");
  CLI::App* dim = add("dim", "algebra and cell module dimensions");
  CLI::App* mult = add("mult", "closure, filtration and associativity checks");
  CLI::App* gram = add("gram", "gram matrix of a cell module", true);
  CLI::App* gram_det = add("gram-det",
                           "gram determinant and closed-form matches", true);
  CLI::App* cells = add("cells", "partition of the basis into cells");
  CLI::App* poset = add("poset", "the quasi-hereditary order candidates");
  CLI::App* vpres = add("verify-presentation",
                        "presented algebra vs diagram algebra");
  CLI::App* vfun = add("verify-functors",
                       "corner localisation against rank n-1 modules");
  CLI::App* vquo = add("verify-quotient",
                       "decoration-forgetting quotient at the special locus");
  CLI::App* decomp = add("decomp",
                         "gram ranks at a seeded specialization", true);
  decomp->add_option("--way", way, "rescaling way to compare against")
      ->check(CLI::Range(0, 4));
  CLI::App* oracle = add("oracle", "reference matrices and determinants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.format = format;
  cfg.cache_dir = cache_dir;

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    ParamKind kind = ParamKind::Generic6;
    if (sub == gram_det && param.empty()) param = "gmp";
    if (param.empty()) param = "generic6";
    kind = parse_kind(param);
    cfg.param = param_kind_name(kind);
    bool has_label = false;
    if (sub == gram || sub == gram_det || sub == decomp)
      has_label = sub->count("--label") > 0;
    cfg.has_label = has_label;
    cfg.label = label;

    if (sub == basis) {
      if (n > 6) return usage_error("basis listing is limited to n <= 6");
      return cmd_basis(cfg);
    }
    if (sub == dim) {
      if (n > 6) return usage_error("dimension report is limited to n <= 6");
      return cmd_dim(cfg);
    }
    if (sub == mult) {
      if (n > 5) return usage_error("product checks are limited to n <= 5");
      return cmd_mult(cfg);
    }
    auto check_label = [&](int nn, int l) {
      auto ls = cell_labels(nn);
      return std::find(ls.begin(), ls.end(), l) != ls.end();
    };
    if (sub == gram || sub == gram_det || (sub == decomp && has_label)) {
      if (!check_label(n, label))
        return usage_error("label must lie in [-n, n-1]");
    }
    if (sub == gram) {
      if (n > 5) return usage_error("gram matrices are limited to n <= 5");
      return cmd_gram(cfg, kind, label);
    }
    if (sub == gram_det) {
      if (label == 0 && n >= 3)
        return usage_error(
            "the symbolic middle-cell determinant is impractical for n >= 3; "
            "use decomp for ranks at specializations");
      return cmd_gram_det(cfg, kind, label);
    }
    if (sub == cells) {
      if (n > 5) return usage_error("cell partition is limited to n <= 5");
      return cmd_cells(cfg, kind);
    }
    if (sub == poset) return cmd_poset(cfg);
    if (sub == vpres) {
      if (n > 5)
        return usage_error("presentation check is limited to n <= 5");
      return cmd_verify_presentation(cfg);
    }
    if (sub == vfun) {
      if (n < 2 || n > 5)
        return usage_error("functor check runs for 2 <= n <= 5");
      return cmd_verify_functors(cfg);
    }
    if (sub == vquo) {
      if (n > 5) return usage_error("quotient check is limited to n <= 5");
      return cmd_verify_quotient(cfg);
    }
    if (sub == decomp) {
      if (n > 5) return usage_error("decomp is limited to n <= 5");
      return cmd_decomp(cfg, kind, has_label, label, way);
    }
    if (sub == oracle) return cmd_oracle(cfg);
    return usage_error("unknown subcommand");
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
