/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_TESTS_CLI_SUPPORT_HH
#define OLSE_GUARD_TESTS_CLI_SUPPORT_HH 1

#include <olse/cli.hh>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cli_support
{
    struct Result
    {
        int status;
        std::string out;
        std::string err;
    };

    inline auto invoke(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "olse");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int status = olse::cli::run(int(argv.size()), argv.data(), out, err);
        return { status, out.str(), err.str() };
    }

    /// A scratch directory removed on destruction.
    class ScratchDir
    {
        private:
            std::filesystem::path _path;

        public:
            ScratchDir()
            {
                std::random_device rd;
                _path = std::filesystem::temp_directory_path() / ("olse-test-" + std::to_string(rd()));
                std::filesystem::create_directories(_path);
            }

            ~ScratchDir()
            {
                std::error_code ignored;
                std::filesystem::remove_all(_path, ignored);
            }

            ScratchDir(const ScratchDir &) = delete;
            auto operator= (const ScratchDir &) -> ScratchDir & = delete;

            auto write(const std::string & name, const std::string & contents) const -> std::string
            {
                auto p = _path / name;
                std::ofstream(p) << contents;
                return p.string();
            }
    };
}

#endif
