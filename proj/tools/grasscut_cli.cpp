// Command-line front end: enumeration of the combinatorial and polyhedral
// data, verification suites, and JSON export.

#include "grasscut/json_io.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

using namespace grasscut;

namespace {

int worker_count() {
  const char *env = std::getenv("GRASSCUT_THREADS");
  if (!env)
    return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

void emit(const Json &payload, const std::string &out_path, bool as_json) {
  std::string text;
  if (as_json) {
    text = payload.dump(2);
    text += "\n";
  } else {
    if (payload.is_array()) {
      for (const auto &item : payload)
        text += item.dump() + "\n";
    } else {
      text = payload.dump(2) + "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

// Display aliases for the benchmark shape; other shapes use P<k>/trivial.
std::string paving_alias(const SizeVector &s, const Paving &p,
                         std::size_t index) {
  auto types = enumerate_types(s);
  bool trivial =
      p.cells.size() == 1 && p.cells[0].points.size() == types.size();
  if (trivial)
    return "trivial";
  if (s.entries() == std::vector<int>{1, 1, 1, 2}) {
    auto key = [&](std::initializer_list<std::pair<int, int>> wall) {
      std::vector<LatticePoint> pts;
      for (auto [a, b] : wall) {
        std::vector<int> v(4, 0);
        if (a == b)
          v[static_cast<std::size_t>(a - 1)] = 2;
        else {
          v[static_cast<std::size_t>(a - 1)] = 1;
          v[static_cast<std::size_t>(b - 1)] = 1;
        }
        pts.emplace_back(v);
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    };
    auto S12 = key({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    auto S13 = key({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
    auto S23 = key({{1, 2}, {2, 3}, {2, 4}, {1, 3}, {3, 4}});
    auto S4 = key({{1, 4}, {2, 4}, {3, 4}, {4, 4}});
    bool has12 = false, has13 = false, has23 = false, has4 = false;
    for (const auto &c : p.cells) {
      has12 = has12 || c.points == S12;
      has13 = has13 || c.points == S13;
      has23 = has23 || c.points == S23;
      has4 = has4 || c.points == S4;
    }
    if (p.cells.size() == 2) {
      if (has12)
        return "S12";
      if (has13)
        return "S13";
      if (has23)
        return "S23";
      if (has4)
        return "S4";
    }
    if (p.cells.size() == 3 && has4) {
      if (has12)
        return "S1244";
      if (has13)
        return "S1344";
      if (has23)
        return "S2344";
    }
  }
  return "P" + std::to_string(index);
}

struct FanRecord {
  std::string alias;
  const Paving *paving;
};

std::vector<FanRecord> fan_records(const SizeVector &s,
                                   const std::vector<Paving> &pavings) {
  std::vector<FanRecord> out;
  for (std::size_t i = 0; i < pavings.size(); ++i)
    out.push_back({paving_alias(s, pavings[i], i), &pavings[i]});
  return out;
}

Json fan_json(const SizeVector &s, const FanRecord &rec) {
  Cone cone = cone_of_paving(s, *rec.paving);
  auto gens = dual_chart_generators(s, *rec.paving);
  Json g = Json::array();
  for (const auto &f : gens)
    g.push_back(json_functional(f));
  Json out = json_paving(*rec.paving);
  out["alias"] = rec.alias;
  out["cone"] = json_cone(cone);
  out["chart_generators"] = g;
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact blow-up data for two-row Grassmannian quotients"};
  app.require_subcommand(1);

  std::string s_flag;
  std::uint64_t seed = 1;
  int trials = 50;
  std::string out_path;
  std::string format = "json";

  auto add_common = [&](CLI::App *cmd, bool with_trials) {
    cmd->add_option("--s", s_flag, "size vector, comma separated")
        ->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_trials) {
      cmd->add_option("--seed", seed, "PRNG seed");
      cmd->add_option("--trials", trials, "number of sampled trials")
          ->check(CLI::PositiveNumber);
    }
  };

  auto *enumerate = app.add_subcommand("enumerate", "list combinatorial data");
  std::string what;
  std::string w_flag;
  enumerate
      ->add_option("what", what, "one of: vs, cs, gw, paves, pavings, jindices")
      ->required();
  enumerate->add_option("--w", w_flag, "weight vector for gw");
  add_common(enumerate, false);

  auto *fan = app.add_subcommand("fan", "cones and chart generators");
  std::string paving_id;
  bool fan_all = false;
  fan->add_option("--paving", paving_id, "paving id (see enumerate pavings)");
  fan->add_flag("--all", fan_all, "export every paving");
  add_common(fan, false);

  auto *verify = app.add_subcommand("verify", "verification suites");
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "one of: charts, embeddings, lemma-em, cross-ratio, oracle")
      ->required();
  add_common(verify, true);

  auto *chart_eval = app.add_subcommand("chart-eval", "evaluate one chart");
  std::string chart_name, params_path;
  chart_eval->add_option("chart", chart_name, "chart name, e.g. X_1A")
      ->required();
  chart_eval->add_option("--params", params_path, "JSON parameter file")
      ->required();
  add_common(chart_eval, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SizeVector s({1, 1});
  try {
    s = SizeVector::parse(s_flag);
  } catch (const std::exception &e) {
    std::cerr << "invalid size vector: " << e.what() << "\n";
    return 2;
  }
  bool as_json = format == "json";

  try {
    if (enumerate->parsed()) {
      Json payload = Json::array();
      if (what == "vs") {
        for (const auto &p : enumerate_types(s))
          payload.push_back(json_point(p));
      } else if (what == "cs") {
        for (const auto &w : essential_weights(s))
          payload.push_back(json_point(w));
      } else if (what == "gw") {
        if (w_flag.empty()) {
          std::cerr << "gw needs --w\n";
          return 2;
        }
        std::vector<int> wv;
        {
          std::stringstream ss(w_flag);
          std::string item;
          while (std::getline(ss, item, ','))
            wv.push_back(std::stoi(item));
        }
        if (static_cast<int>(wv.size()) != s.blocks()) {
          std::cerr << "--w must have one entry per block\n";
          return 2;
        }
        WeightVector w(wv);
        for (const auto &m : weight_monomials(s, w))
          payload.push_back(json_monomial(m));
      } else if (what == "paves") {
        for (const auto &c : enumerate_paves(s))
          payload.push_back(json_cell(c));
      } else if (what == "pavings") {
        auto pav = enumerate_pavings(s);
        auto recs = fan_records(s, pav);
        for (const auto &r : recs) {
          Json j = json_paving(*r.paving);
          j["alias"] = r.alias;
          payload.push_back(j);
        }
      } else if (what == "jindices") {
        for (const auto &tau : enumerate_chart_indices(s)) {
          Json j;
          j["id"] = tau.to_string();
          j["class"] = tau.class_two() ? 2 : 1;
          payload.push_back(j);
        }
      } else {
        std::cerr << "unknown enumeration: " << what << "\n";
        return 2;
      }
      emit(payload, out_path, as_json);
      return 0;
    }

    if (fan->parsed()) {
      if (s.blocks() > 4) {
        std::cerr << "fan: too many blocks\n";
        return 3;
      }
      auto pav = enumerate_pavings(s);
      auto recs = fan_records(s, pav);
      if (fan_all) {
        Json payload = Json::array();
        for (const auto &r : recs)
          payload.push_back(fan_json(s, r));
        emit(payload, out_path, as_json);
        return 0;
      }
      for (const auto &r : recs)
        if (r.alias == paving_id || r.paving->id == paving_id) {
          emit(fan_json(s, r), out_path, as_json);
          return 0;
        }
      std::cerr << "unknown paving id: " << paving_id << "\n";
      return 4;
    }

    if (verify->parsed()) {
      Json report;
      report["suite"] = suite;
      report["s"] = s.to_string();
      report["seed"] = seed;
      report["trials"] = trials;
      bool pass = true;
      if (suite == "cross-ratio") {
        if (s.columns() != 4 || s.blocks() != 4) {
          std::cerr << "cross-ratio runs on four singleton blocks\n";
          return 2;
        }
        std::mt19937_64 rng(seed);
        int done = 0, checked = 0;
        while (done < trials) {
          Matrix2xN m(4);
          for (int r = 1; r <= 2; ++r)
            for (int c = 1; c <= 4; ++c)
              m.set(r, c,
                    RatFunc(Rational(static_cast<long long>(rng() % 41) - 20,
                                     static_cast<long long>(rng() % 20) + 1)));
          auto pt = plucker_vector(m);
          if (!pt)
            continue;
          ++done;
          WeightVector w(std::vector<int>{1, 1, 1, 1});
          auto img = map_Fw(s, w, *pt);
          if (!img)
            continue;
          auto c = img->canonical().coords();
          if (!(c[0] - c[1] + c[2]).is_zero())
            pass = false;
          ++checked;
        }
        report["checked"] = checked;
      } else if (suite == "oracle") {
        for (const auto &w : essential_weights(s)) {
          auto fast = weight_monomials(s, w);
          auto slow = weight_monomials_bruteforce(s, w);
          if (fast != slow)
            pass = false;
          for (const auto &m : fast)
            if (!(torus_weight(s, m) == w))
              pass = false;
        }
      } else if (suite == "lemma-em") {
        for (int e : s.entries())
          if (e != 1) {
            std::cerr << "lemma-em runs on all-singleton size vectors\n";
            return 2;
          }
        const int N = s.blocks();
        std::mt19937_64 rng(seed);
        std::vector<int> rest;
        for (int j = 3; j <= N; ++j)
          rest.push_back(j);
        for (std::size_t mask = 0; mask < (1u << rest.size()); ++mask) {
          ChartIndex tau;
          tau.j1 = striple_of(s, 1);
          tau.j2 = striple_of(s, 2);
          for (std::size_t i = 0; i < rest.size(); ++i) {
            STriple jt = striple_of(s, rest[i]);
            if ((mask >> i) & 1u)
              tau.minus_list.push_back(jt);
            else
              tau.plus_list.push_back(jt);
          }
          for (int t = 1; t <= N; ++t)
            for (int trial = 0; trial < trials; ++trial) {
              std::map<std::string, Rational> assign;
              for (const auto &v : gamma_variables(s, tau))
                assign[v] = Rational(static_cast<long long>(rng() % 41) - 20,
                                     static_cast<long long>(rng() % 20) + 1);
              auto chk = extension_check(N, tau, t, assign);
              if (!chk.pass)
                pass = false;
            }
        }
      } else if (suite == "charts") {
        auto cat = chart_catalog(s);
        Json items = Json::array();
        for (const auto &c : cat) {
          bool ok = check_plucker_relations_sym(plucker_minors_sym(c.theta),
                                                c.sizes.columns());
          ChartSpec back = chart_from_json(json_chart(c));
          ok = ok && back.name == c.name && back.variables == c.variables &&
               back.inverted.size() == c.inverted.size();
          items.push_back(Json{{"chart", c.name}, {"ok", ok}});
          pass = pass && ok;
        }
        report["charts"] = items;
      } else if (suite == "embeddings") {
        auto cat = chart_catalog(s);
        std::vector<EmbeddingReport> reports(cat.size());
        int threads = worker_count();
        std::atomic<std::size_t> next{0};
        auto work = [&] {
          while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cat.size())
              break;
            reports[i] = verify_embedding(cat[i], trials, seed);
          }
        };
        if (threads <= 1) {
          work();
        } else {
          std::vector<std::thread> pool;
          for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
          for (auto &th : pool)
            th.join();
        }
        Json items = Json::array();
        for (const auto &r : reports) {
          items.push_back(json_report(r));
          pass = pass && r.pass();
        }
        report["charts"] = items;
      } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      report["pass"] = pass;
      emit(report, out_path, as_json);
      return pass ? 0 : 1;
    }

    if (chart_eval->parsed()) {
      auto cat = chart_catalog(s);
      const ChartSpec *chart = nullptr;
      for (const auto &c : cat)
        if (c.name == chart_name)
          chart = &c;
      if (!chart) {
        std::cerr << "unknown chart: " << chart_name << "\n";
        return 2;
      }
      std::ifstream f(params_path);
      if (!f) {
        std::cerr << "cannot read " << params_path << "\n";
        return 2;
      }
      Json jp = Json::parse(f);
      auto params = params_from_json(jp);
      for (const auto &v : chart->variables)
        if (!params.count(v))
          params[v] = Rational(0);
      for (const auto &u : chart->inverted)
        if (u.eval(params).is_zero()) {
          std::cerr << "off the chart domain: " << u.to_string()
                    << " vanishes\n";
          return 5;
        }
      Matrix2xN m = chart->theta.eval(params);
      Json out;
      out["chart"] = chart->name;
      Json minors = Json::array();
      for (const auto &p : all_pairs(s.columns()))
        minors.push_back(
            Json{{"pair", json_pair(p)},
                 {"value", json_rational(m.minor_of(p).eval({}))}});
      out["minors"] = minors;
      auto pt = plucker_vector(m);
      Json factors = Json::array();
      Json indeterminate = Json::array();
      if (pt) {
        KsImage ks = map_Ks(s, *pt);
        for (const auto &[w, img] : ks.factors) {
          Json coords = Json::array();
          for (std::size_t i = 0; i < img.coords().size(); ++i)
            coords.push_back(Json{{"monomial", img.labels()[i]},
                                  {"value", json_rational(img.coords()[i])}});
          factors.push_back(Json{{"w", json_point(w)}, {"coords", coords}});
        }
        for (const auto &w : ks.indeterminate)
          indeterminate.push_back(json_point(w));
      }
      out["weight_factors"] = factors;
      out["indeterminate_weights"] = indeterminate;
      emit(out, out_path, as_json);
      return 0;
    }
  } catch (const std::invalid_argument &e) {
    std::string msg = e.what();
    std::cerr << msg << "\n";
    if (msg.find("too many blocks") != std::string::npos)
      return 3;
    return 2;
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
