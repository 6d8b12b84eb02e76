// runs every cases/<name>.args through the CLI binary and diffs stdout and the exit status
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

static std::string quote(const std::string& a) {
  std::string q = "'";
  for (char c : a) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_runner <cli> <golden dir> [--update]\n";
    return 2;
  }
  std::string cli = fs::absolute(argv[1]).string();
  fs::path dir = fs::path(argv[2]) / "cases";
  bool update = argc > 3 && std::string(argv[3]) == "--update";
  fs::current_path(dir);
  std::vector<fs::path> cases;
  for (auto& e : fs::directory_iterator("."))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  int failed = 0;
  for (auto& c : cases) {
    std::string name = c.stem().string();
    std::string cmd = quote(cli);
    std::ifstream in(c);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) cmd += " " + quote(line);
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    fs::path exp_out = name + ".out", exp_code = name + ".code";
    int want_code = fs::exists(exp_code) ? std::stoi(slurp(exp_code)) : 0;
    if (update) {
      std::ofstream(exp_out) << out;
      std::cout << "updated " << name << "\n";
      continue;
    }
    bool ok = fs::exists(exp_out) && slurp(exp_out) == out && code == want_code;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (exit " << code << ")\n";
    failed += !ok;
  }
  std::cout << cases.size() - failed << "/" << cases.size() << " golden cases match\n";
  return failed ? 1 : 0;
}
