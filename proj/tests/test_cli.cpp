// End-to-end checks of the command-line tool: exit codes, stdout values,
// emitted files, and byte-identical reruns.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int checks = 0, failed = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failed;
    std::fprintf(stderr, "FAILED: %s\n", what.c_str());
  }
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const fs::path& dir) {
  const fs::path stdout_path = dir / "stdout.txt";
  const std::string cmd =
      std::string(SPHERESPAN_CLI_PATH) + " " + args + " > " + stdout_path.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(stdout_path);
  return r;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "spherespan_cli_tests";
  fs::remove_all(dir);
  fs::create_directories(dir);

  write(dir / "square.json", R"({"kind":"lp","p":"inf","dim":2})");
  write(dir / "disk.json", R"({"kind":"lp","p":2.0,"dim":2})");
  write(dir / "lp4.json", R"({"kind":"lp","p":4.0,"dim":2})");
  write(dir / "poly_square.json",
        R"({"kind":"polytope","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]})");

  // gauge prints the plain value.
  {
    const RunResult r = run("gauge --body " + (dir / "square.json").string() + " --point 0.5,0.25",
                            dir);
    expect(r.exit_code == 0, "gauge exit code");
    expect(r.out == "0.5\n", "gauge stdout, got: " + r.out);
  }

  // 3D bodies flow through the same surface.
  {
    write(dir / "ball3.json", R"({"kind":"lp","p":2.0,"dim":3})");
    const RunResult r =
        run("gauge --body " + (dir / "ball3.json").string() + " --point 0,0,0.25", dir);
    expect(r.exit_code == 0, "3D gauge exit code");
    expect(r.out == "0.25\n", "3D gauge stdout, got: " + r.out);
  }

  // Unreadable body spec names the problem and exits 1.
  {
    const RunResult r = run("gauge --body " + (dir / "missing.json").string() + " --point 0,1",
                            dir);
    expect(r.exit_code == 1, "missing body exit code");
  }

  // chord: JSON out + CSV side file.
  {
    const RunResult r = run("chord --body " + (dir / "disk.json").string() +
                                " --midpoint 0.5,0 --out " + (dir / "chords.json").string() +
                                " --csv " + (dir / "chords.csv").string(),
                            dir);
    expect(r.exit_code == 0, "chord exit code");
    const std::string csv = slurp(dir / "chords.csv");
    expect(csv.rfind("p1_x,p1_y,p2_x,p2_y\n", 0) == 0, "chord csv header");
    expect(slurp(dir / "chords.json").find("0.86602540378") != std::string::npos,
           "chord endpoint value");
  }

  // decompose3: byte-identical across reruns, and verify accepts the output.
  {
    const std::string base = "decompose3 --body " + (dir / "disk.json").string() +
                             " --grid 100 --seed 0 --out ";
    expect(run(base + (dir / "cert_a.json").string(), dir).exit_code == 0, "decompose3 run a");
    expect(run(base + (dir / "cert_b.json").string(), dir).exit_code == 0, "decompose3 run b");
    expect(slurp(dir / "cert_a.json") == slurp(dir / "cert_b.json"),
           "decompose3 outputs byte-identical");
    const RunResult v = run("verify --input " + (dir / "cert_a.json").string() + " --body " +
                                (dir / "disk.json").string(),
                            dir);
    expect(v.exit_code == 0, "verify accepts the certificate");

    // Tampered coefficients must be rejected.
    std::string cert = slurp(dir / "cert_a.json");
    const auto pos = cert.find("\"coefficients\": [");
    cert.replace(pos + 18, 1, "9");
    write(dir / "cert_bad.json", cert);
    expect(run("verify --input " + (dir / "cert_bad.json").string(), dir).exit_code == 1,
           "verify rejects tampering");
  }

  // decompose-path emits a convex certificate with four components.
  {
    const RunResult r = run("decompose-path --body " + (dir / "lp4.json").string() +
                                " --samples 120 --seed 3 --r 0.5 --out " +
                                (dir / "path_cert.json").string(),
                            dir);
    expect(r.exit_code == 0, "decompose-path exit code");
    expect(run("verify --input " + (dir / "path_cert.json").string() + " --body " +
                   (dir / "lp4.json").string(),
               dir).exit_code == 0,
           "verify accepts the path certificate");
  }

  // decompose4 runs on the demo path.
  expect(run("decompose4 --body " + (dir / "disk.json").string() + " --samples 80 --seed 1 --out " +
                 (dir / "four.json").string(),
             dir).exit_code == 0,
         "decompose4 exit code");

  // degree: loop map JSON in, integer on stdout.
  {
    std::ostringstream map_json;
    map_json << R"({"domain":[)";
    std::ostringstream image;
    for (int k = 0; k < 64; ++k) {
      const double t = 6.283185307179586 * k / 64;
      map_json << (k ? "," : "") << "[" << std::cos(t) << "," << std::sin(t) << "]";
      image << (k ? "," : "") << "[" << std::cos(2 * t) << "," << std::sin(2 * t) << "]";
    }
    map_json << R"(],"image":[)" << image.str() << "]}";
    write(dir / "doubling.json", map_json.str());
    const RunResult r = run("degree --input " + (dir / "doubling.json").string(), dir);
    expect(r.exit_code == 0, "degree exit code");
    expect(r.out == "2\n", "degree stdout, got: " + r.out);
  }

  // theta on the disk reports a right angle.
  {
    const RunResult r = run("theta --body " + (dir / "disk.json").string() +
                                " --uradius 0.1 --midpoints 200 --resolution 1000 --out " +
                                (dir / "theta.json").string() + " --csv " +
                                (dir / "theta.csv").string(),
                            dir);
    expect(r.exit_code == 0, "theta exit code");
    expect(slurp(dir / "theta.json").find("\"theta\": 1.570796") != std::string::npos,
           "theta value");
    expect(slurp(dir / "theta.csv").rfind("p_x,p_y,angle\n", 0) == 0, "theta csv header");
  }

  // witness defeats the canonical section.
  {
    const RunResult r = run("witness --body " + (dir / "lp4.json").string() +
                                " --uradius 0.1 --grid 32 --heuristic 0 --out " +
                                (dir / "witness.json").string(),
                            dir);
    expect(r.exit_code == 0, "witness exit code");
    expect(slurp(dir / "witness.json").find("\"all_defeated\": true") != std::string::npos,
           "witness defeats the canonical section");
  }

  // refute: built-in adversarial candidate must exit 2.
  {
    const RunResult r = run("refute --body " + (dir / "disk.json").string() + " --seed 4 --out " +
                                (dir / "refutation.json").string(),
                            dir);
    expect(r.exit_code == 2, "refute exit code 2");
    expect(slurp(dir / "refutation.json").find("\"refuted\": true") != std::string::npos,
           "refutation emitted");
  }

  // approx reports the inscribed-square distance.
  {
    const RunResult r = run("approx --body " + (dir / "disk.json").string() + " --m 4 --out " +
                                (dir / "approx.json").string(),
                            dir);
    expect(r.exit_code == 0, "approx exit code");
    expect(slurp(dir / "approx.json").find("0.29289321881") != std::string::npos,
           "approx hausdorff value");
  }

  // face-check passes on a square edge and fails on a perturbed component.
  {
    write(dir / "face_ok.json",
          R"({"v":[1,0],"components":[[1,1],[1,-1]],"lambdas":[0.5,0.5]})");
    expect(run("face-check --body " + (dir / "poly_square.json").string() + " --input " +
                   (dir / "face_ok.json").string(),
               dir).exit_code == 0,
           "face-check pass");
    write(dir / "face_bad.json",
          R"({"v":[1,0],"components":[[0.999,0.999],[1,-1]],"lambdas":[0.5,0.5]})");
    expect(run("face-check --body " + (dir / "poly_square.json").string() + " --input " +
                   (dir / "face_bad.json").string(),
               dir).exit_code == 1,
           "face-check fail");
  }

  std::printf("cli tests: %d checks, %d failed\n", checks, failed);
  return failed == 0 ? 0 : 1;
}
