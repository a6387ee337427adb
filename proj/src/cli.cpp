#include "specfactor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "specfactor/error.hpp"
#include "specfactor/json_io.hpp"

namespace specfactor::cli {

namespace {

using nlohmann::json;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

RatMat load_matrix(const std::string& path) { return io::ratmat_from_json(load_file(path)); }

json stamped(json body) {
  json out = {{"schema", io::kSchema}};
  out.update(body);
  return out;
}

json degree_list(const PoleZeroProfile& p, const std::vector<Point>& pts, bool poles) {
  json out = json::array();
  for (const auto& x : pts)
    out.push_back({{"point", io::to_json(x)}, {"degree", poles ? p.pole_degree(x) : p.zero_degree(x)}});
  return out;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t pos = 0;
    unsigned long r = std::stoul(s.substr(0, comma), &pos);
    if (pos != comma) throw std::invalid_argument(s);
    std::string rest = s.substr(comma + 1);
    unsigned long n = std::stoul(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument(s);
    return {r, n};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--size", "expected r,n but got '" + s + "'");
  }
}

struct Options {
  std::vector<std::string> files;
  std::string point;
  std::string region_p = "outer", region_z = "outer";
  std::uint64_t seed = 1;
  std::string size = "1,1";
  std::size_t degree = 1;
  std::size_t instances = 200;
  std::string report;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Smith-McMillan, all-pass and spectral factor tools over Q(i).", "specfactor"};
  app.require_subcommand(1);
  Options o;

  auto* smform = app.add_subcommand("smform", "Smith-McMillan diagonal eps_i/psi_i of a rational matrix");
  smform->add_option("matrix", o.files, "RatMat JSON file")->required()->expected(1);

  auto* degree = app.add_subcommand("degree", "McMillan degree (total pole degree including infinity)");
  degree->add_option("matrix", o.files, "RatMat JSON file")->required()->expected(1);
  degree->add_option("--point", o.point, "also report pole/zero degree at this point");

  auto* polezeros = app.add_subcommand("polezeros", "Poles and zeros with their degrees, infinity included");
  polezeros->add_option("matrix", o.files, "RatMat JSON file")->required()->expected(1);

  auto* analyze =
      app.add_subcommand("analyze", "Pole, zero and zero-pole cancellation in G H at a point, with degree checks");
  analyze->add_option("matrices", o.files, "G.json H.json")->required()->expected(2);
  analyze->add_option("--point", o.point, "point such as 1/2+3/4*i or inf")->required();

  auto* factorize = app.add_subcommand("allpass-factorize",
                                       "Minimal Blaschke-Potapov factorization C U_1...U_n of a para-unitary matrix");
  factorize->add_option("matrix", o.files, "RatMat JSON file")->required()->expected(1);

  auto* verify = app.add_subcommand("verify-factor", "Check W* W == Phi and stochastic minimality 2 deg W = deg Phi");
  verify->add_option("matrices", o.files, "W.json Phi.json")->required()->expected(2);

  auto* unique = app.add_subcommand(
      "check-uniqueness", "Check the hypotheses of the uniqueness theorem for W, W1 and recover T = W1 W^-R");
  unique->add_option("matrices", o.files, "W.json W1.json")->required()->expected(2);
  unique->add_option("--region-p", o.region_p, "pole region: outer|inner[,flip=p1;p2][,weak]");
  unique->add_option("--region-z", o.region_z, "zero region, same grammar");

  auto* generate =
      app.add_subcommand("generate", "Seeded stochastically minimal factor W and its spectrum Phi = W* W");
  generate->add_option("--seed", o.seed, "generator seed");
  generate->add_option("--size", o.size, "r,n with r <= n");
  generate->add_option("--degree", o.degree, "McMillan degree of W");
  generate->add_option("--region-p", o.region_p, "pole region: outer|inner[,flip=p1;p2][,weak]");
  generate->add_option("--region-z", o.region_z, "zero region, same grammar");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run the uniqueness harness over seeded instances and region geometries");
  sweep_cmd->add_option("--instances", o.instances, "number of instances");
  sweep_cmd->add_option("--seed", o.seed, "sweep seed");
  sweep_cmd->add_option("--report", o.report, "write the full report here; stdout gets the summary");

  if (args.empty()) {
    err << app.help();
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'specfactor --help' for usage\n";
    return 2;
  }

  try {
    json result;
    if (smform->parsed()) {
      result = io::to_json(sm_structure(load_matrix(o.files[0])));
    } else if (degree->parsed()) {
      PoleZeroProfile p(load_matrix(o.files[0]));
      result = {{"mcmillan", p.mcmillan_degree()}};
      if (!o.point.empty()) {
        Point x = parse_point(o.point);
        result["point"] = io::to_json(x);
        result["pole_degree"] = p.pole_degree(x);
        result["zero_degree"] = p.zero_degree(x);
      }
    } else if (polezeros->parsed()) {
      PoleZeroProfile p(load_matrix(o.files[0]));
      result = {{"rank", p.rank()},
                {"poles", degree_list(p, p.poles(), true)},
                {"zeros", degree_list(p, p.zeros(), false)},
                {"mcmillan", p.mcmillan_degree()}};
    } else if (analyze->parsed()) {
      ProductAnalysis a(load_matrix(o.files[0]), load_matrix(o.files[1]));
      Point x = parse_point(o.point);
      result = io::to_json(a.report(x));
      result["full_rank_hypothesis"] = a.full_rank_hypothesis();
      if (a.full_rank_hypothesis()) {
        result["degree_identity"] = check_degree_identity(a, x);
        result["lemma2"] = check_lemma2(a, x);
      }
    } else if (factorize->parsed()) {
      AllPassFactorization f = potapov_factorize(load_matrix(o.files[0]));
      result = io::to_json(f);
      result["degree"] = degree_of_factorization(f);
    } else if (verify->parsed()) {
      RatMat w = load_matrix(o.files[0]);
      Spectrum phi = make_spectrum(load_matrix(o.files[1]));
      bool factor = is_spectral_factor(w, phi);
      PsdReport psd = psd_on_circle(phi);
      result = {{"spectral_factor", factor},
                {"stochastically_minimal", factor ? json(is_stochastically_minimal(w, phi)) : json(nullptr)},
                {"psd_on_circle", {{"psd", psd.psd}, {"evaluated", psd.evaluated}, {"skipped", psd.skipped}}}};
    } else if (unique->parsed()) {
      Region ap = parse_region(o.region_p), az = parse_region(o.region_z);
      result = io::to_json(uniqueness_check(load_matrix(o.files[0]), load_matrix(o.files[1]), ap, az));
      result["region_p"] = to_string(ap);
      result["region_z"] = to_string(az);
    } else if (generate->parsed()) {
      auto [r, n] = parse_size(o.size);
      Region ap = parse_region(o.region_p), az = parse_region(o.region_z);
      Instance inst = generate_instance(o.seed, r, n, o.degree, ap, az);
      result = {{"seed", o.seed},
                {"size", {r, n}},
                {"degree", o.degree},
                {"region_p", to_string(ap)},
                {"region_z", to_string(az)},
                {"attempts", inst.attempts},
                {"W", io::to_json(inst.w)},
                {"Phi", io::to_json(inst.phi.phi)}};
    } else if (sweep_cmd->parsed()) {
      SweepReport rep = sweep(o.seed, o.instances);
      json full = stamped(io::to_json(rep));
      if (o.report.empty()) {
        result = io::to_json(rep);
      } else {
        std::ofstream f(o.report);
        if (!f) throw Error(ErrorCode::IoError, "cannot write '" + o.report + "'");
        f << full.dump(2) << "\n";
        result = full;
        result.erase("records");
        result["report"] = o.report;
      }
    }
    out << stamped(std::move(result)).dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    json body = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    err << stamped({{"error", body}}).dump(2) << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace specfactor::cli
