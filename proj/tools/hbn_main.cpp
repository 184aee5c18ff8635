#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hbn/completion.hpp"
#include "hbn/components.hpp"
#include "hbn/core.hpp"
#include "hbn/oracle.hpp"
#include "hbn/smoothness.hpp"
#include "hbn/strata.hpp"
#include "json.hpp"

namespace {

using hbn::Int;

std::vector<Int> parse_seq(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    Int v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw hbn::error(hbn::errc::range_error, "bad integer: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw hbn::error(hbn::errc::length_mismatch, "empty sequence");
  return out;
}

int resolve_threads(int threads_flag) {
  if (threads_flag > 0) return threads_flag;
  if (const char* env = std::getenv("HBN_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

void warn_generic_range(hbn::CurveParams p) {
  if (p.outside_generic_range())
    std::cerr << "warning: k >= (g+3)/2; results describe the combinatorial model "
                 "outside its geometric range\n";
}

std::string table_of_types(const hbn::StratificationTable& t) {
  std::ostringstream os;
  os << "sequence\tu\tdim\n";
  for (size_t i = 0; i < t.types.size(); ++i) {
    os << hbn::to_string(t.types[i]) << '\t' << t.u[i] << '\t';
    if (t.dims[i])
      os << *t.dims[i];
    else
      os << "-";
    os << '\n';
  }
  return os.str();
}

std::string table_of_components(const std::vector<hbn::Component>& cs) {
  std::ostringstream os;
  os << "sequence\tclass\tdim\tl\tB(a,b,x,y,m1,m2)\n";
  for (const auto& c : cs) {
    os << hbn::to_string(c.sequence) << '\t' << hbn::class_name(c.cls) << '\t' << c.dim
       << '\t' << c.l << '\t' << "B(" << c.btype.a << ',' << c.btype.b << ',' << c.btype.x
       << ',' << c.btype.y << ',' << c.btype.m1 << ',' << c.btype.m2 << ")\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator for splitting-type strata and components of W^r_d"};
  app.require_subcommand(1);

  Int g = 0, k = 0, d = 0, r = 0, level = 0, umax = -1, mmax = 2;
  std::string seq_str, format = "json", suite = "all";
  int threads = 0;

  auto add_params = [&](CLI::App* c, bool need_d = true) {
    c->add_option("--g", g, "genus")->required();
    c->add_option("--k", k, "gonality")->required();
    if (need_d) c->add_option("--d", d, "degree")->required();
    c->add_option("--format", format)->check(CLI::IsMember({"json", "table", "dot"}));
  };

  auto* c_complete = app.add_subcommand("complete", "balanced completion e[level]");
  add_params(c_complete);
  c_complete->add_option("--e", seq_str, "comma-separated sequence")->required();
  c_complete->add_option("--level", level, "completion level")->required();

  auto* c_enum = app.add_subcommand("enumerate", "list splitting types with u <= umax");
  add_params(c_enum);
  c_enum->add_option("--umax", umax, "u bound (default g)");
  c_enum->add_option("--threads", threads, "worker threads (or HBN_THREADS)");

  auto* c_hasse = app.add_subcommand("hasse", "dominance-order Hasse diagram");
  add_params(c_hasse);
  c_hasse->add_option("--umax", umax, "u bound (default g)");
  c_hasse->add_option("--threads", threads, "worker threads (or HBN_THREADS)");

  auto* c_comp = app.add_subcommand("components", "irreducible components of W^r_d");
  add_params(c_comp);
  c_comp->add_option("--r", r, "rank")->required();

  auto* c_classify = app.add_subcommand("classify", "smooth/singular verdict in W^r_d");
  add_params(c_classify);
  c_classify->add_option("--e", seq_str, "comma-separated sequence")->required();
  c_classify->add_option("--r", r, "rank")->required();

  auto* c_point = app.add_subcommand("point", "all verdicts for a point, with ambients");
  add_params(c_point);
  c_point->add_option("--e", seq_str, "comma-separated sequence")->required();
  c_point->add_option("--r", r, "rank")->required();

  auto* c_witness = app.add_subcommand("witness", "singular-witness constructions");
  add_params(c_witness);
  c_witness->add_option("--e", seq_str, "component sequence")->required();
  c_witness->add_option("--r", r, "rank")->required();

  auto* c_verify = app.add_subcommand("verify", "run a differential-oracle suite");
  add_params(c_verify);
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "lemma2", "v", "dominance", "pencil"}));
  c_verify->add_option("--umax", umax, "u bound (default g)");
  c_verify->add_option("--r", r, "rank for the V-equivalence suite");
  c_verify->add_option("--mmax", mmax, "twist bound for the pencil suite");

  auto* c_replay = app.add_subcommand("replay", "replay the worked examples");
  c_replay->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    hbn::CurveParams params{g, k, d};
    if (!c_replay->parsed()) warn_generic_range(params);
    Int ubound = umax >= 0 ? umax : g;

    if (c_complete->parsed()) {
      auto e = hbn::make_sequence(parse_seq(seq_str), params);
      auto res = hbn::complete(e, level);
      nlohmann::json j;
      j["params"] = {{"g", g}, {"k", k}, {"d", d}};
      j["e"] = e.entries();
      j["level"] = res.level;
      j["threshold_index"] = res.threshold_index;
      j["completed"] = res.completed.entries();
      if (format == "table")
        std::cout << "e\t" << hbn::to_string(e) << "\nlevel\t" << level << "\ni(e,level)\t"
                  << res.threshold_index << "\ncompleted\t" << hbn::to_string(res.completed)
                  << "\n";
      else
        std::cout << j.dump(2) << "\n";
    } else if (c_enum->parsed()) {
      auto t = hbn::enumerate_types(params, ubound, resolve_threads(threads));
      std::cout << (format == "table" ? table_of_types(t) : hbn::table_to_json(t) + "\n");
    } else if (c_hasse->parsed()) {
      auto t = hbn::enumerate_types(params, ubound, resolve_threads(threads));
      auto h = hbn::hasse_diagram(t);
      if (format == "json") {
        nlohmann::json j;
        j["params"] = {{"g", g}, {"k", k}, {"d", d}};
        j["nodes"] = nlohmann::json::array();
        for (const auto& e : t.types) j["nodes"].push_back(e.entries());
        j["edges"] = nlohmann::json::array();
        for (const auto& ed : h.edges) j["edges"].push_back({ed.lower, ed.upper});
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << hbn::hasse_to_dot(t, h);
      }
    } else if (c_comp->parsed()) {
      auto cs = hbn::components_of_W(params, r);
      std::cout << (format == "table" ? table_of_components(cs)
                                      : hbn::components_to_json(params, r, cs) + "\n");
    } else if (c_classify->parsed()) {
      auto p = hbn::make_sequence(parse_seq(seq_str), params);
      auto v = hbn::classify_in_W(p, r);
      std::cout << hbn::verdict_to_json(p, v) << "\n";
    } else if (c_point->parsed()) {
      auto p = hbn::make_sequence(parse_seq(seq_str), params);
      nlohmann::json j;
      j["point"] = p.entries();
      j["params"] = {{"g", g}, {"k", k}, {"d", d}};
      j["h0"] = hbn::h0(p, 0);
      j["verdicts"] = nlohmann::json::array();
      j["verdicts"].push_back(
          nlohmann::json::parse(hbn::verdict_to_json(p, hbn::classify_in_W(p, r))));
      for (const auto& c : hbn::components_containing(p, r)) {
        if (c.btype.b >= 2 && c.cls != hbn::ComponentClass::I && hbn::in_V(p, c))
          j["verdicts"].push_back(
              nlohmann::json::parse(hbn::verdict_to_json(p, hbn::theoremB_classify(c, p))));
        j["verdicts"].push_back(nlohmann::json::parse(
            hbn::verdict_to_json(p, hbn::certified_smooth_in_closure(c.sequence, 0, p))));
      }
      std::cout << j.dump(2) << "\n";
    } else if (c_witness->parsed()) {
      auto e = hbn::make_sequence(parse_seq(seq_str), params);
      const hbn::Component* self = nullptr;
      auto cs = hbn::components_of_W(params, r);
      for (const auto& c : cs)
        if (c.sequence == e) self = &c;
      if (!self)
        throw hbn::error(hbn::errc::precondition_fail,
                         hbn::to_string(e) + " is not a component of W^" + std::to_string(r));
      nlohmann::json j;
      j["component"] = e.entries();
      j["class"] = hbn::class_name(self->cls);
      if (self->cls == hbn::ComponentClass::I) {
        auto second = hbn::typeI_second_component(*self);
        j["second_component"] =
            second ? nlohmann::json(second->sequence.entries()) : nlohmann::json();
        auto wit = hbn::typeI_singular_unique_witness(*self);
        j["singular_witness"] = wit ? nlohmann::json(wit->entries()) : nlohmann::json();
      } else {
        j["second_component"] = nullptr;
        j["singular_witness"] = nullptr;
        j["note"] = "constructions apply to class I components only";
      }
      std::cout << j.dump(2) << "\n";
    } else if (c_verify->parsed()) {
      std::vector<hbn::VerificationReport> reports;
      if (suite == "all" || suite == "lemma2")
        reports.push_back(hbn::verify_lemma2(params, ubound));
      if (suite == "all" || suite == "v")
        reports.push_back(hbn::verify_v_equivalence(params, r));
      if (suite == "all" || suite == "dominance")
        reports.push_back(hbn::verify_dominance_axioms(params, ubound));
      if (suite == "all" || suite == "pencil")
        reports.push_back(hbn::verify_pencil_inequality(params, ubound, mmax));
      bool ok = true;
      for (const auto& rep : reports) {
        std::cout << hbn::report_to_json(rep) << "\n";
        ok = ok && rep.passed();
      }
      return ok ? 0 : 1;
    } else if (c_replay->parsed()) {
      auto rep = hbn::replay_worked_examples();
      std::cout << hbn::report_to_json(rep) << "\n";
      return rep.passed() ? 0 : 1;
    }
  } catch (const hbn::error& e) {
    std::cerr << "error (" << hbn::errc_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
