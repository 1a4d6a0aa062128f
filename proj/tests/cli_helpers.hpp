#pragma once

#include "ljlab/cli.hpp"
#include "ljlab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cli_helpers
{

struct Run
{
	int status;
	std::string out;
	std::string err;
};

inline Run run(const std::vector<std::string>& args)
{
	std::ostringstream out;
	std::ostringstream err;
	const int status = ljlab::cli::run(args, out, err);
	return {status, out.str(), err.str()};
}

inline std::string write_temp(const std::string& name, const nlohmann::json& j)
{
	const auto dir = std::filesystem::temp_directory_path() / "ljlab_tests";
	std::filesystem::create_directories(dir);
	const auto path = dir / name;
	std::ofstream(path) << j.dump();
	return path.string();
}

} // namespace cli_helpers
