#include "braidcalc/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "braidcalc/b3.hpp"
#include "braidcalc/certifier.hpp"
#include "braidcalc/closure.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/json_io.hpp"
#include "braidcalc/markov.hpp"
#include "braidcalc/templates.hpp"

namespace braidcalc {

namespace {

struct Options {
  bool json = false;
  bool text = false;
  std::optional<int> n;
  std::string word1;
  std::string word2;
  // flype
  std::optional<int> sign;
  std::string block_p;
  std::string block_r;
  std::string block_q;
  std::string template_file;
  // tower-validate
  std::string tower_file;
  // certify / sweep
  int p = 0;
  int q = 0;
  int r = 0;
  int max = 0;
  std::optional<int> p_max;
  std::optional<int> q_max;
  std::optional<int> r_max;
  bool serial = false;
  std::string out_file;
};

bool default_json() {
  const char* env = std::getenv("BRAIDCALC_FORMAT");
  return env != nullptr && std::string(env) == "json";
}

bool wants_json(const Options& o) {
  if (o.json) return true;
  if (o.text) return false;
  return default_json();
}

void add_format_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_flag("--text", o.text, "text output (overrides BRAIDCALC_FORMAT)");
}

BraidWord read_word(const std::string& text, std::optional<int> n) { return BraidWord::parse(text, n); }

// B3 verbs default to three strands unless the word or --n says otherwise.
BraidWord read_b3_word(const std::string& text, std::optional<int> n) {
  if (!n && text.find("n=") == std::string::npos) n = 3;
  return BraidWord::parse(text, n);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const BraidWord w = read_word(o.word1, o.n);
  const auto comps = components(w);
  const auto perm = underlying_permutation(w);
  const std::string alex = alexander_polynomial(w).to_string();
  if (wants_json(o)) {
    out << Json{{"word", w.to_string()},
                {"e", exponent_sum(w)},
                {"b", w.strands()},
                {"beta", bennequin(w)},
                {"permutation", perm.images()},
                {"component_count", comps.size()},
                {"alexander", alex}}
               .dump(2)
        << '\n';
  } else {
    out << "word: " << w.to_string() << '\n'
        << "e=" << exponent_sum(w) << " b=" << w.strands() << " beta=" << bennequin(w) << '\n'
        << "permutation: " << join_ints(perm.images()) << '\n'
        << "components: " << comps.size() << '\n'
        << "alexander: " << alex << '\n';
  }
  return kExitOk;
}

int cmd_components(const Options& o, std::ostream& out) {
  const BraidWord w = read_word(o.word1, o.n);
  if (wants_json(o)) {
    out << closure_json(w).dump(2) << '\n';
    return kExitOk;
  }
  const auto comps = components(w);
  const auto lk = linking_matrix(comps);
  out << "word: " << w.to_string() << " (n=" << w.strands() << ")\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps.parts[i];
    out << "component " << i + 1 << ": members=" << join_ints(c.members) << " strands=" << c.strands
        << " self_writhe=" << c.self_writhe << " beta=" << c.beta << '\n';
  }
  out << "linking matrix:\n";
  for (const auto& row : lk.lk) out << "  " << join_ints(row) << '\n';
  out << "alexander: " << alexander_polynomial(w).to_string() << '\n';
  return kExitOk;
}

int cmd_conjugate(const Options& o, std::ostream& out) {
  const BraidWord a = read_b3_word(o.word1, o.n);
  const BraidWord b = read_b3_word(o.word2, o.n);
  const auto na = b3::normal_form(a);
  const auto nb = b3::normal_form(b);
  const bool conj = na == nb;
  if (wants_json(o)) {
    out << Json{{"conjugate", conj}, {"normal_form_1", na.to_string()}, {"normal_form_2", nb.to_string()}}.dump(2)
        << '\n';
  } else {
    out << "conjugate: " << (conj ? "true" : "false") << '\n'
        << "normal_form_1: " << na.to_string() << '\n'
        << "normal_form_2: " << nb.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const BraidWord w = read_b3_word(o.word1, o.n);
  const auto cls = b3::to_string(b3::classify_closure(w));
  if (wants_json(o)) {
    out << Json{{"word", w.to_string()}, {"normal_form", b3::normal_form(w).to_string()}, {"class", cls}}.dump(2)
        << '\n';
  } else {
    out << "word: " << w.to_string() << '\n' << "class: " << cls << '\n';
  }
  return kExitOk;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_flype(const Options& o, std::istream& in, std::ostream& out) {
  TemplateDescription desc{builtin_template(FlypeKind{Sign::Negative}), {}};
  if (!o.template_file.empty()) {
    desc = parse_template_description(parse_json_text(read_all(o.template_file, in)));
  } else {
    if (!o.sign) throw ParseError("flype needs --sign or --template");
    Sign sign;
    try {
      sign = sign_from_int(*o.sign);
    } catch (const BraidError& e) {
      throw ParseError(e.what());
    }
    desc.tmpl = builtin_template(FlypeKind{sign});
    desc.assignment = {{"P", BraidWord::parse(o.block_p, 2)},
                       {"R", BraidWord::parse(o.block_r, 2)},
                       {"Q", BraidWord::parse(o.block_q, 2)}};
  }
  const BraidWord plus = instantiate(desc.tmpl.plus, desc.assignment);
  const BraidWord minus = instantiate(desc.tmpl.minus, desc.assignment);
  const auto table = per_component_beta_delta(desc.tmpl, desc.assignment);
  if (wants_json(o)) {
    out << Json{{"template", desc.tmpl.name},
                {"plus_word", plus.to_string()},
                {"minus_word", minus.to_string()},
                {"strands_plus", plus.strands()},
                {"strands_minus", minus.strands()},
                {"beta_plus", bennequin(plus)},
                {"beta_minus", bennequin(minus)},
                {"alexander_plus", alexander_polynomial(plus).to_string()},
                {"alexander_minus", alexander_polynomial(minus).to_string()},
                {"component_table", beta_delta_json(table)}}
               .dump(2)
        << '\n';
  } else {
    out << "template: " << desc.tmpl.name << '\n'
        << "plus:  " << plus.to_string() << " (n=" << plus.strands() << ", beta=" << bennequin(plus) << ")\n"
        << "minus: " << minus.to_string() << " (n=" << minus.strands() << ", beta=" << bennequin(minus) << ")\n"
        << "component  beta_plus  beta_minus\n";
    for (const auto& row : table) {
      out << row.label << "         " << row.beta_plus << "         " << row.beta_minus
          << (row.changed() ? "   changed" : "") << '\n';
    }
  }
  return kExitOk;
}

int cmd_tower(const Options& o, std::istream& in, std::ostream& out) {
  const TowerVerdict v = validate_tower_json(parse_json_text(read_all(o.tower_file, in)));
  if (wants_json(o)) {
    out << verdict_json(v).dump(2) << '\n';
  } else {
    out << "valid: " << (v.valid ? "true" : "false") << '\n'
        << "counts: v+=" << v.counts.v_plus << " v-=" << v.counts.v_minus << " s+=" << v.counts.s_plus
        << " s-=" << v.counts.s_minus << '\n'
        << "betas: " << join_ints(v.betas) << '\n'
        << "beta_constant: " << (v.beta_constant ? "true" : "false") << '\n';
    for (const auto& f : v.faults) out << to_string(f.kind) << " at step " << f.step << ": " << f.detail << '\n';
  }
  return v.valid ? kExitOk : kExitCheckFailed;
}

void emit(const Options& o, std::ostream& out, const std::string& body) {
  if (o.out_file.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw ParseError("cannot write " + o.out_file);
  f << body;
}

std::string report_text(const CertificationReport& rep) {
  std::ostringstream s;
  auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
  s << "p=" << rep.params.p << " q=" << rep.params.q << " r=" << rep.params.r << '\n'
    << "TX+ = " << rep.tx_plus.to_string() << '\n'
    << "TX- = " << rep.tx_minus.to_string() << '\n'
    << "conditions            " << yn(rep.conditions_ok) << '\n'
    << "beta                  " << yn(rep.beta_formula_ok) << "  (" << rep.beta_plus << ", " << rep.beta_minus
    << "; expected " << rep.beta_expected << ")\n"
    << "alexander equal       " << yn(rep.alexander_equal) << "  " << rep.alexander_plus << '\n'
    << "conjugacy distinct    " << yn(rep.conjugacy_distinct) << "  " << rep.normal_form_plus.to_string()
    << " | " << rep.normal_form_minus.to_string() << '\n'
    << "not unknot / torus    " << yn(rep.not_unknot && rep.not_torus) << "  " << rep.class_plus << " | "
    << rep.class_minus << '\n'
    << "single flype sign     " << yn(rep.kolee_single_sign) << '\n'
    << "obstruction           " << yn(rep.obstruction.swap_detected) << "  " << rep.obstruction.plus_word.to_string()
    << " -> " << rep.obstruction.minus_word.to_string() << '\n';
  for (const auto& row : rep.obstruction.component_table) {
    s << "  " << row.label << ": beta " << row.beta_plus << " -> " << row.beta_minus << '\n';
  }
  s << "verdict: " << rep.verdict() << '\n';
  return s.str();
}

int cmd_certify(const Options& o, std::ostream& out) {
  const CertificationReport rep = certify({o.p, o.q, o.r});
  emit(o, out, wants_json(o) ? report_json(rep).dump(2) + "\n" : report_text(rep));
  return rep.certified ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const int pm = o.p_max.value_or(o.max);
  const int qm = o.q_max.value_or(o.max);
  const int rm = o.r_max.value_or(o.max);
  if (pm < 2 || qm < 2 || rm < 2) throw ParseError("sweep bounds must be >= 2");
  const auto reports = o.serial ? sweep_serial(pm, qm, rm) : sweep(pm, qm, rm);
  bool all = true;
  for (const auto& r : reports) all = all && r.certified;
  if (wants_json(o)) {
    emit(o, out, sweep_json(reports).dump(2) + "\n");
  } else {
    std::ostringstream s;
    std::size_t certified = 0;
    for (const auto& r : reports) {
      certified += r.certified ? 1 : 0;
      s << "p=" << r.params.p << " q=" << r.params.q << " r=" << r.params.r << " beta=" << r.beta_plus << ' '
        << r.verdict() << '\n';
    }
    s << "certified " << certified << "/" << reports.size() << '\n';
    emit(o, out, s.str());
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid calculus for closed braids and transverse knots", "braidcalc"};
  app.require_subcommand(1);
  Options o;

  auto* inv = app.add_subcommand("invariants", "exponent sum, braid index, Bennequin invariant");
  inv->add_option("word", o.word1, "braid word, e.g. \"s1^3 s2^-1\"")->required();
  inv->add_option("--n", o.n, "strand count");
  add_format_flags(inv, o);

  auto* comp = app.add_subcommand("components", "closure components, linking matrix, Alexander polynomial");
  comp->add_option("word", o.word1, "braid word")->required();
  comp->add_option("--n", o.n, "strand count");
  add_format_flags(comp, o);

  auto* conj = app.add_subcommand("conjugate", "decide conjugacy in B3");
  conj->add_option("word1", o.word1, "first 3-braid")->required();
  conj->add_option("word2", o.word2, "second 3-braid")->required();
  conj->add_option("--n", o.n, "strand count (must be 3)");
  add_format_flags(conj, o);

  auto* cls = app.add_subcommand("classify", "exceptional closed 3-braid classes");
  cls->add_option("word", o.word1, "3-braid word")->required();
  cls->add_option("--n", o.n, "strand count (must be 3)");
  add_format_flags(cls, o);

  auto* fly = app.add_subcommand("flype", "instantiate a template and compare component betas");
  fly->add_option("--sign", o.sign, "flype sign, +1 or -1");
  fly->add_option("--P", o.block_p, "braid on block P (2 strands)")->default_val("");
  fly->add_option("--R", o.block_r, "braid on block R (2 strands)")->default_val("");
  fly->add_option("--Q", o.block_q, "braid on block Q (2 strands)")->default_val("");
  fly->add_option("--template", o.template_file, "template description JSON file ('-' for stdin)");
  add_format_flags(fly, o);

  auto* tower = app.add_subcommand("tower-validate", "replay and validate a Markov tower file");
  tower->add_option("file", o.tower_file, "tower JSON file ('-' for stdin)")->required();
  add_format_flags(tower, o);

  auto* cert = app.add_subcommand("certify", "certify one (p,q,r) family member");
  cert->add_option("--p", o.p)->required();
  cert->add_option("--q", o.q)->required();
  cert->add_option("--r", o.r)->required();
  cert->add_option("--out", o.out_file, "write the report to a file");
  add_format_flags(cert, o);

  auto* sw = app.add_subcommand("sweep", "certify every admissible triple up to a bound");
  sw->add_option("--max", o.max, "bound for p, q and r")->default_val(5);
  sw->add_option("--p-max", o.p_max);
  sw->add_option("--q-max", o.q_max);
  sw->add_option("--r-max", o.r_max);
  sw->add_flag("--serial", o.serial, "use the single-threaded reference sweep");
  sw->add_option("--out", o.out_file, "write the reports to a file");
  add_format_flags(sw, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "braidcalc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(o, out);
    if (comp->parsed()) return cmd_components(o, out);
    if (conj->parsed()) return cmd_conjugate(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (fly->parsed()) return cmd_flype(o, in, out);
    if (tower->parsed()) return cmd_tower(o, in, out);
    if (cert->parsed()) return cmd_certify(o, out);
    if (sw->parsed()) return cmd_sweep(o, out);
  } catch (const BraidError& e) {
    err << "braidcalc: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "braidcalc: no command\n";
  return kExitUsage;
}

}  // namespace braidcalc
