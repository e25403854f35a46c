#include <CLI11.hpp>
#include <iostream>

#include "formint/cli.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integration, exactness and telescoping of rational differential forms"};
  app.require_subcommand(1);
  formint::Command cmd;
  std::string vars, order, format = "doc";
  app.add_option("--format", format, "doc (one line) or pretty")->check(CLI::IsMember({"doc", "pretty"}));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--vars", vars, "ordered form variables, e.g. x,y,z");
    sub->add_option("--param", cmd.param, "parameter name (always t)");
    sub->add_option("--order", order, "elimination order, first eliminated first");
    sub->add_option("--format", format, "doc (one line) or pretty")->check(CLI::IsMember({"doc", "pretty"}));
  };

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"hermite", "rational part of a closed 1-form, or Hermite reduction of a scalar in --var"},
      {"integrate1", "primitive of a closed 1-form"},
      {"integratep", "primitive (p-1)-form of a closed p-form"},
      {"exact1", "decide whether a closed 1-form has a rational primitive"},
      {"gd", "Griffiths-Dwork decision for f dx_1 ^ ... ^ dx_m, or P*Omega/Q^ell with --Q"},
      {"smooth", "smoothness of the projective hypersurface Q = 0"},
      {"telescope", "minimal telescoper of a closed 1-form in the parameter t"},
      {"verify-picard", "check sum d(u_i)/dx_i = f for: f u_1 ... u_m"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("payload", cmd.payload, "expression(s)");
    if (name == "hermite") sub->add_option("--var", cmd.var, "integration variable for a scalar");
    if (name == "gd") {
      sub->add_flag("--early-exit", cmd.early_exit, "stop at the first nonzero remainder");
      sub->add_option("--P", cmd.P, "numerator in homogeneous coordinates");
      sub->add_option("--Q", cmd.Q, "polar polynomial in homogeneous coordinates");
      sub->add_option("--ell", cmd.ell, "pole order");
    }
    sub->callback([&cmd, name = name] { cmd.verb = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : formint::kUsage;
  }
  cmd.vars = split_commas(vars);
  cmd.order = split_commas(order);

  auto out = formint::run_command(cmd);
  std::cout << (format == "pretty" ? out.doc.dump(2) : out.doc.dump()) << "\n";
  if (out.doc.contains("error")) std::cerr << "formint: " << out.doc["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
