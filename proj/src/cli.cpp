#include "f4l/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "f4l/f4chars.hpp"
#include "f4l/hecke.hpp"
#include "f4l/labels.hpp"
#include "f4l/relative.hpp"
#include "f4l/verify.hpp"

namespace f4l {

namespace {

void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_file);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// ---- roots ----

std::string roots_json(const RootSystem& sys) {
  Json j;
  j["schema"] = 1;
  j["type"] = to_string(sys.type());
  j["count"] = sys.size();
  j["positive"] = sys.positive_count();
  Json roots = Json::array();
  for (int i = 0; i < sys.size(); ++i) {
    Json rj;
    Json coords = Json::array();
    for (int k = 0; k < sys.rank(); ++k) coords.push_back(sys.coords(i)(k));
    rj["coords"] = coords;
    rj["sign"] = sys.positive(i) ? "+" : "-";
    rj["length"] = to_string(sys.length_class(i));
    roots.push_back(rj);
  }
  j["roots"] = roots;
  return json_text(j);
}

std::string roots_text(const RootSystem& sys) {
  std::ostringstream os;
  os << to_string(sys.type()) << ": " << sys.size() << " roots, " << sys.positive_count()
     << " positive\n";
  for (int i = 0; i < sys.size(); ++i) {
    os << (sys.positive(i) ? "+ " : "- ") << "(";
    for (int k = 0; k < sys.rank(); ++k) os << (k ? "," : "") << sys.coords(i)(k);
    os << ") " << to_string(sys.length_class(i)) << "\n";
  }
  return os.str();
}

// ---- weyl classes ----

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i + 1);
  return s;
}

std::string classes_json(const Enumeration& en, const ClassData& cd) {
  Json j;
  j["schema"] = 1;
  j["type"] = to_string(en.group().roots().type());
  j["order"] = en.size();
  j["class_count"] = cd.num_classes();
  Json cls = Json::array();
  for (int c = 0; c < cd.num_classes(); ++c) {
    Json cj;
    cj["index"] = c;
    cj["representative"] = word_str(*en.at(cd.reps[c]).word);
    cj["size"] = cd.sizes[c];
    cj["element_order"] = en.group().order(en.at(cd.reps[c]));
    cj["square_class"] = cd.power_map[c];
    cls.push_back(cj);
  }
  j["classes"] = cls;
  return json_text(j);
}

std::string classes_text(const Enumeration& en, const ClassData& cd) {
  std::ostringstream os;
  os << to_string(en.group().roots().type()) << ": |W| = " << en.size() << ", "
     << cd.num_classes() << " classes\n";
  for (int c = 0; c < cd.num_classes(); ++c)
    os << std::setw(3) << c << "  rep " << std::setw(26) << word_str(*en.at(cd.reps[c]).word)
       << "  size " << std::setw(4) << cd.sizes[c] << "  order "
       << en.group().order(en.at(cd.reps[c])) << "  square -> class " << cd.power_map[c] << "\n";
  return os.str();
}

// ---- chartable ----

std::string chartable_json() {
  const auto& t = f4_table();
  const auto labels_c = assign_labels(t, Convention::C);
  const auto labels_l = assign_labels(t, Convention::L);
  Json j;
  j["schema"] = 1;
  j["group"] = "W(F4)";
  Json cls = Json::array();
  for (int c = 0; c < t.classes().num_classes(); ++c) {
    Json cj;
    cj["index"] = c;
    cj["representative"] = word_str(*t.enumeration().at(t.classes().reps[c]).word);
    cj["size"] = t.classes().sizes[c];
    cls.push_back(cj);
  }
  j["classes"] = cls;
  j["printed_columns"] = Json{{"d,a", t.class_da()}, {"tau,tau*sigma", t.class_tt()},
                              {"a*tau", t.class_at()}};
  Json chars = Json::array();
  for (const auto& rec : t.records()) {
    Json cj;
    cj["kondo"] = rec.kondo;
    cj["alias"] = alias_chi(rec.kondo);
    cj["carter"] = labels_c.at(rec.kondo).second.str();
    cj["kondo_under_L"] = labels_l.at(rec.kondo).first;
    cj["a_value"] = dataset_row(rec.kondo).a_value;
    cj["b_invariant"] = rec.b_invariant;
    cj["degree"] = rec.degree;
    cj["fake_degree"] = rec.fake_degree;
    Json vals = Json::array();
    for (long long v : rec.values) vals.push_back(v);
    cj["values"] = vals;
    chars.push_back(cj);
  }
  j["characters"] = chars;
  return json_text(j);
}

std::string chartable_text() {
  const auto& t = f4_table();
  const auto labels_c = assign_labels(t, Convention::C);
  std::ostringstream os;
  os << "Irr(W(F4)): 25 characters; columns: class of d,a / tau,tau*sigma / a*tau\n";
  for (const LabelRow& row : label_dataset()) {
    const auto& rec = t.by_kondo(row.kondo);
    os << std::setw(5) << rec.kondo << "  " << std::setw(12) << labels_c.at(rec.kondo).second.str()
       << "  a=" << std::setw(2) << row.a_value << "  b=" << std::setw(2) << rec.b_invariant
       << "  " << std::setw(3) << rec.values[t.class_da()] << " " << std::setw(3)
       << rec.values[t.class_tt()] << " " << std::setw(3) << rec.values[t.class_at()] << "\n";
  }
  os << "full value table (classes 0..24):\n";
  for (const auto& rec : t.records()) {
    os << std::setw(5) << rec.kondo << " :";
    for (long long v : rec.values) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string chartable_latex() {
  const auto& t = f4_table();
  const auto labels_c = assign_labels(t, Convention::C);
  std::ostringstream os;
  os << "\\begin{array}{ccrrrr} \\hline\n";
  os << "\\phi & & a_\\phi & d,a & \\tau,\\tau\\sigma & a\\tau\\\\ \\hline\n";
  for (const LabelRow& row : label_dataset()) {
    const auto& rec = t.by_kondo(row.kondo);
    std::string kondo = rec.kondo;
    const auto us = kondo.find('_');
    kondo = kondo.substr(0, us) + "_{" + kondo.substr(us + 1) + "}";
    os << kondo << " & " << labels_c.at(rec.kondo).second.latex() << " & " << row.a_value << " & "
       << rec.values[t.class_da()] << " & " << rec.values[t.class_tt()] << " & "
       << rec.values[t.class_at()] << "\\\\\n";
  }
  os << "\\hline\n\\end{array}\n";
  return os.str();
}

// ---- generic degree ----

std::string generic_degree_output(const std::string& rep, const std::string& spec,
                                  const std::string& format) {
  const GenericDegree& gd = degree_by_name(rep);
  int a = 0, b = 0;
  UniQuot reduced;
  if (!spec.empty()) {
    std::stringstream ss(spec);
    char comma = 0;
    if (!(ss >> a >> comma >> b) || comma != ',' || a <= 0 || b <= 0)
      throw CLI::ValidationError("--spec expects 'a,b' with positive integers");
    reduced = specialize(gd.value, a, b);
  }
  if (format == "json") {
    Json j;
    j["schema"] = 1;
    j["rep"] = gd.rep;
    j["dim"] = gd.dim;
    j["numerator"] = gd.value.num;
    j["denominator"] = gd.value.den;
    j["schur"] = gd.schur;
    j["poincare"] = gd.poincare;
    if (!spec.empty()) {
      j["substitution"] = "u->q^" + std::to_string(a) + ", v->q^" + std::to_string(b);
      j["reduced"] = reduced;
      const auto [c, e] = lowest_term(reduced);
      j["lowest_term"] = Json::array({e, c.frac_str()});
      if (reduced.is_polynomial() && !reduced.num.is_zero()) j["ennola"] = ennola(reduced.num);
    }
    return json_text(j);
  }
  std::ostringstream os;
  os << "generic degree of " << gd.rep << " (dim " << gd.dim << ")\n";
  os << "  numerator   = " << gd.value.num.str() << "\n";
  os << "  denominator = " << gd.value.den.str() << "\n";
  if (!spec.empty()) {
    os << "  at (u,v) -> (q^" << a << ", q^" << b << "): " << reduced.num.str();
    if (!reduced.is_polynomial()) os << " / " << reduced.den.str();
    const auto [c, e] = lowest_term(reduced);
    os << "\n  lowest term = " << c.str() << (e != 0 ? "*q^" + std::to_string(e) : "") << "\n";
  }
  return os.str();
}

// ---- convert-labels ----

CarterLabel parse_carter(const std::string& s) {
  // phi{d,b} followed by zero, one or two apostrophes
  if (s.rfind("phi{", 0) != 0) throw CLI::ValidationError("bad Carter name: " + s);
  const auto close = s.find('}');
  const auto comma = s.find(',');
  if (close == std::string::npos || comma == std::string::npos || comma > close)
    throw CLI::ValidationError("bad Carter name: " + s);
  CarterLabel c;
  c.d = std::stoi(s.substr(4, comma - 4));
  c.b = std::stoi(s.substr(comma + 1, close - comma - 1));
  c.primes = static_cast<int>(s.size() - close - 1);
  if (c.primes < 0 || c.primes > 2 || s.substr(close + 1) != std::string(c.primes, '\''))
    throw CLI::ValidationError("bad Carter name: " + s);
  return c;
}

std::string convert_labels_output(const std::string& from, const std::string& to,
                                  const std::string& chr, const std::string& format) {
  if (!((from == "lusztig" && to == "carter") || (from == "carter" && to == "lusztig")))
    throw CLI::ValidationError("--from/--to must be lusztig and carter in either order");
  const auto table = conversion_table(f4_table());

  std::vector<std::pair<std::string, std::string>> rows;  // input label -> output label
  for (const auto& [carter, kondo] : table) {
    if (from == "lusztig")
      rows.emplace_back(kondo, carter.str());
    else
      rows.emplace_back(carter.str(), kondo);
  }
  if (!chr.empty()) {
    std::string key = chr;
    if (from == "carter") key = parse_carter(chr).str();
    std::vector<std::pair<std::string, std::string>> found;
    for (const auto& r : rows)
      if (r.first == key) found.push_back(r);
    if (found.empty()) throw CLI::ValidationError("unknown character label: " + chr);
    rows = found;
  }

  if (format == "json") {
    Json j;
    j["schema"] = 1;
    j["from"] = from;
    j["to"] = to;
    Json arr = Json::array();
    for (const auto& [in, outl] : rows) arr.push_back(Json{{"from", in}, {"to", outl}});
    j["labels"] = arr;
    return json_text(j);
  }
  if (format == "latex") {
    std::ostringstream os;
    for (const auto& [carter, kondo] : table) {
      std::string k = kondo;
      const auto us = k.find('_');
      k = k.substr(0, us) + "_{" + k.substr(us + 1) + "}";
      os << carter.latex() << " & " << k << "\\\\\n";
    }
    return os.str();
  }
  std::ostringstream os;
  for (const auto& [in, outl] : rows) {
    if (chr.empty())
      os << in << " -> " << outl << "\n";
    else
      os << outl << "\n";
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations for the two labelling conventions of Irr(W(F4))"};
  app.require_subcommand(1);

  std::string format = "text", out_file, type_str = "F4";

  auto* roots_cmd = app.add_subcommand("roots", "list the roots of an ambient type");
  roots_cmd->add_option("--type", type_str, "A1,B2,G2,D4,F4,E6,E7,E8");
  roots_cmd->add_option("--format", format, "text|json");
  roots_cmd->add_option("--out", out_file, "write output to a file");

  std::string weyl_what = "classes";
  auto* weyl_cmd = app.add_subcommand("weyl", "group data (enumeration, conjugacy classes)");
  weyl_cmd->add_option("--type", type_str, "F4,B2,G2,D4,A1");
  weyl_cmd->add_option("what", weyl_what, "classes");
  weyl_cmd->add_option("--format", format, "text|json");
  weyl_cmd->add_option("--out", out_file, "write output to a file");

  auto* chart_cmd = app.add_subcommand("chartable", "the 25 irreducible characters of W(F4)");
  chart_cmd->add_option("--format", format, "text|json|latex");
  chart_cmd->add_option("--out", out_file, "write output to a file");

  std::string rep_name = "2_1", spec_str;
  auto* gd_cmd = app.add_subcommand("generic-degree", "two-parameter generic degrees");
  gd_cmd->add_option("--rep", rep_name, "1_1,1_2,1_3,1_4,2_1,2_3");
  gd_cmd->add_option("--spec", spec_str, "substitution exponents 'a,b' for u->q^a, v->q^b");
  gd_cmd->add_option("--format", format, "text|json");
  gd_cmd->add_option("--out", out_file, "write output to a file");

  std::string ambient_str = "F4", levi_str;
  auto* rel_cmd = app.add_subcommand("relative", "relative root system for a Levi subset");
  rel_cmd->add_option("--ambient", ambient_str, "F4,E6,E7,E8");
  rel_cmd->add_option("--levi", levi_str, "comma-separated node names, e.g. a2,a3")->required();
  rel_cmd->add_option("--format", format, "text|json");
  rel_cmd->add_option("--out", out_file, "write output to a file");

  std::string fold_type = "2E6";
  auto* fold_cmd = app.add_subcommand("fold", "folding of E6 to the twisted form");
  fold_cmd->add_option("--type", fold_type, "2E6");
  fold_cmd->add_option("--format", format, "text|json");
  fold_cmd->add_option("--out", out_file, "write output to a file");

  std::string from_str, to_str, char_str;
  auto* conv_cmd = app.add_subcommand("convert-labels", "convert between labelling conventions");
  conv_cmd->add_option("--from", from_str, "lusztig|carter")->required();
  conv_cmd->add_option("--to", to_str, "carter|lusztig")->required();
  conv_cmd->add_option("--char", char_str, "single character label to convert");
  conv_cmd->add_option("--format", format, "text|json|latex");
  conv_cmd->add_option("--out", out_file, "write output to a file");

  auto* verify_cmd = app.add_subcommand("verify", "run every check and emit the findings report");
  std::string verify_format = "json";
  verify_cmd->add_option("--format", verify_format, "json|text");
  verify_cmd->add_option("--out", out_file, "write output to a file");

  std::vector<std::string> argv_vec = args;
  argv_vec.insert(argv_vec.begin(), "f4labels");
  std::vector<const char*> argv;
  for (const auto& s : argv_vec) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (*roots_cmd) {
      const RootSystem sys = RootSystem::build(type_from_string(type_str));
      emit(format == "json" ? roots_json(sys) : roots_text(sys), out_file, out);
    } else if (*weyl_cmd) {
      if (weyl_what != "classes") throw CLI::ValidationError("unknown weyl request: " + weyl_what);
      const Enumeration en = Enumeration::build(WeylGroup(RootSystem::build(type_from_string(type_str))));
      const ClassData cd = conjugacy_classes(en);
      emit(format == "json" ? classes_json(en, cd) : classes_text(en, cd), out_file, out);
    } else if (*chart_cmd) {
      emit(format == "json"    ? chartable_json()
           : format == "latex" ? chartable_latex()
                               : chartable_text(),
           out_file, out);
    } else if (*gd_cmd) {
      emit(generic_degree_output(rep_name, spec_str, format), out_file, out);
    } else if (*rel_cmd) {
      const Type ambient_t = type_from_string(ambient_str);
      const RelativeDatum d = relative_system(
          ambient_t, parse_levi(levi_str, static_cast<int>(ambient(ambient_t).cartan.rows())));
      if (format == "json") {
        const Json dj = datum_json(d);
        Json full;
        full["schema"] = 1;
        for (const auto& [k, v] : dj.items()) full[k] = v;
        emit(json_text(full), out_file, out);
      } else {
        emit(datum_text(d), out_file, out);
      }
    } else if (*fold_cmd) {
      if (fold_type != "2E6") throw CLI::ValidationError("unknown folding type: " + fold_type);
      const FoldingDatum d = fold_twisted_e6();
      if (format == "json") {
        const Json dj = datum_json(d);
        Json full;
        full["schema"] = 1;
        for (const auto& [k, v] : dj.items()) full[k] = v;
        emit(json_text(full), out_file, out);
      } else {
        emit(datum_text(d), out_file, out);
      }
    } else if (*conv_cmd) {
      emit(convert_labels_output(from_str, to_str, char_str, format), out_file, out);
    } else if (*verify_cmd) {
      const VerifyResult res = run_verify();
      emit(verify_format == "text" ? verify_text(res.report) : json_text(res.report), out_file,
           out);
      return res.hard_fail ? 2 : 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace f4l
