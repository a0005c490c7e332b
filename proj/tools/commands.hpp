#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "table.hpp"

namespace chialvo::cli {

/// Argument combinations CLI11 cannot express; exits with status 2.
struct BadArguments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string name;
  std::function<nlohmann::ordered_json()> value;
  std::function<bool()> present;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::vector<Input> inputs;
  std::function<Table()> run;
  std::vector<std::shared_ptr<void>> storage;

  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

using CommandList = std::vector<std::unique_ptr<Command>>;

/// Adds every analysis subcommand to `app`.
void register_commands(CLI::App& app, CommandList& commands);

}  // namespace chialvo::cli
