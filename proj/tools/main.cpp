// chialvo: command-line front end. Every subcommand writes one table and a
// manifest next to it (<output>.manifest.json).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chialvo/errors.hpp"
#include "commands.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = CHIALVO_VERSION;
constexpr const char* kOutputDirEnv = "CHIALVO_OUTPUT_DIR";

enum ExitCode { kOk = 0, kIoError = 1, kBadArgs = 2, kDomain = 3, kNumeric = 4 };

fs::path output_path(const chialvo::cli::Command& cmd) {
  if (!cmd.out.empty()) return cmd.out;
  const char* dir = std::getenv(kOutputDirEnv);
  const fs::path base = (dir && *dir) ? fs::path(dir) : fs::current_path();
  return base / (cmd.name + "." + cmd.format);
}

ordered_json manifest(const chialvo::cli::Command& cmd, const fs::path& out, double wall) {
  ordered_json inputs = ordered_json::object();
  for (const auto& in : cmd.inputs) {
    if (in.name == "out") continue;
    if (in.present()) inputs[in.name] = in.value();
  }
  ordered_json m;
  m["tool"] = "chialvo";
  m["version"] = kVersion;
  m["subcommand"] = cmd.name;
  m["inputs"] = std::move(inputs);
  m["output"] = fs::absolute(out).string();
  m["format"] = cmd.format;
  m["seed"] = cmd.seed;
  m["wall_time_s"] = wall;
  return m;
}

std::string arg_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return chialvo::cli::format_double(v.get<double>());
  return v.dump();
}

int run(const std::vector<std::string>& args);

/// Rebuilds the command line stored in a manifest and runs it again.
int replay(const std::string& manifest_path, const std::string& out_override) {
  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "cannot read manifest " << manifest_path << "\n";
    return kBadArgs;
  }
  ordered_json m;
  try {
    m = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    std::cerr << "bad manifest: " << e.what() << "\n";
    return kBadArgs;
  }
  if (!m.contains("subcommand") || !m.contains("inputs") || !m.contains("output")) {
    std::cerr << "manifest lacks subcommand, inputs or output\n";
    return kBadArgs;
  }
  if (m.value("version", "") != kVersion) {
    std::cerr << "warning: manifest written by version " << m.value("version", "?") << "\n";
  }
  std::vector<std::string> args{"chialvo", m["subcommand"].get<std::string>()};
  for (const auto& [name, value] : m["inputs"].items()) {
    args.push_back("--" + name);
    args.push_back(arg_text(value));
  }
  args.push_back("--out");
  args.push_back(out_override.empty() ? m["output"].get<std::string>() : out_override);
  return run(args);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Numerical toolkit for the Chialvo neuron map", "chialvo"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  chialvo::cli::CommandList commands;
  chialvo::cli::register_commands(app, commands);

  std::string manifest_in;
  std::string replay_out;
  auto* rp = app.add_subcommand("replay", "Regenerate an output from its manifest");
  rp->add_option("manifest", manifest_in, "Manifest file")->required()->check(CLI::ExistingFile);
  rp->add_option("--out", replay_out, "Write here instead of the recorded output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadArgs;
  }

  if (rp->parsed()) return replay(manifest_in, replay_out);

  for (const auto& cmd : commands) {
    if (!cmd->app->parsed()) continue;
    const fs::path out = output_path(*cmd);
    const auto t0 = std::chrono::steady_clock::now();
    chialvo::cli::Table table;
    try {
      table = cmd->run();
    } catch (const chialvo::cli::BadArguments& e) {
      std::cerr << cmd->name << ": " << e.what() << "\n";
      return kBadArgs;
    } catch (const chialvo::DomainError& e) {
      std::cerr << cmd->name << ": domain error: " << e.what() << "\n";
      return kDomain;
    } catch (const chialvo::NumericError& e) {
      std::cerr << cmd->name << ": numeric failure: " << e.what() << "\n";
      return kNumeric;
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::error_code ec;
    if (out.has_parent_path()) fs::create_directories(out.parent_path(), ec);
    std::ofstream os(out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return kIoError;
    }
    if (cmd->format == "json") {
      chialvo::cli::write_json(os, table);
    } else {
      chialvo::cli::write_csv(os, table);
    }
    std::ofstream ms(out.string() + ".manifest.json", std::ios::binary);
    ms << manifest(*cmd, out, wall).dump(2) << "\n";
    if (!os || !ms) {
      std::cerr << "write failed for " << out << "\n";
      return kIoError;
    }
    std::cout << out.string() << "\n";
    return kOk;
  }
  return kBadArgs;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args);
}
