#include "schmidt/counts_io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace schmidt {
namespace io {

const char* const kToolVersion = "witnesslab 1.0.0";

namespace {

const char* kMagic = "schmidt-witness-counts v1";

std::string setName(scenarios::MeasurementSet set) {
  switch (set) {
    case scenarios::MeasurementSet::SetI:
      return "I";
    case scenarios::MeasurementSet::SetII:
      return "II";
    case scenarios::MeasurementSet::Tetrahedron:
      return "tetrahedron";
  }
  return "?";
}

scenarios::MeasurementSet setFromName(const std::string& name, int line) {
  if (name == "I") return scenarios::MeasurementSet::SetI;
  if (name == "II") return scenarios::MeasurementSet::SetII;
  if (name == "tetrahedron") return scenarios::MeasurementSet::Tetrahedron;
  throw ParseError(line, "unknown measurement set '" + name + "'");
}

}  // namespace

std::string serializeCounts(const stats::CountsTable& table) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "kind " << (table.kind == ScenarioKind::A ? "a" : "b") << "\n";
  os << "set " << setName(table.set) << "\n";
  if (table.kind == ScenarioKind::A)
    os << "middle " << table.middleQubits << "\n";
  os << "shots " << table.shots << "\n";
  os << "jobs " << table.jobCount() << "\n";
  os << "repetitions " << table.repetitions << "\n";
  if (table.synthetic)
    os << "seed " << table.seed << "\n";
  else
    os << "seed none\n";
  os << "device " << table.device << "\n";
  for (int j = 0; j < table.jobCount(); ++j) {
    os << "job " << j << "\n";
    const auto& job = table.jobs[j];
    if (table.kind == ScenarioKind::A) {
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
          const auto& c = job.settings[i][k];
          os << "setting " << (i + 1) << " " << (k + 1) << " " << c[0] << " "
             << c[1] << " " << c[2] << " " << c[3] << "\n";
        }
    } else {
      for (int a = 0; a < 8; ++a) {
        os << "counts " << ((a >> 2) & 1) << ((a >> 1) & 1) << (a & 1);
        for (int b = 0; b < 8; ++b) os << " " << job.raw[a * 8 + b];
        os << "\n";
      }
    }
  }
  os << "end\n";
  return os.str();
}

stats::CountsTable parseCounts(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineNo = 0;
  auto nextLine = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineNo;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  auto expectField = [&](const std::string& key) -> std::string {
    if (!nextLine()) throw ParseError(lineNo, "unexpected end of document");
    if (line.rfind(key + " ", 0) != 0)
      throw ParseError(lineNo, "expected '" + key + " ...'");
    return line.substr(key.size() + 1);
  };
  auto toLL = [&](const std::string& s, const char* what) -> long long {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError(lineNo, std::string("bad ") + what + " '" + s + "'");
    }
  };

  if (!nextLine() || line != kMagic)
    throw ParseError(lineNo == 0 ? 1 : lineNo,
                     std::string("expected header '") + kMagic + "'");

  stats::CountsTable t;
  std::string kind = expectField("kind");
  if (kind == "a")
    t.kind = ScenarioKind::A;
  else if (kind == "b")
    t.kind = ScenarioKind::B;
  else
    throw ParseError(lineNo, "kind must be 'a' or 'b'");
  t.set = setFromName(expectField("set"), lineNo);
  if (t.kind == ScenarioKind::A) {
    if (t.set == scenarios::MeasurementSet::Tetrahedron)
      throw ParseError(lineNo, "kind a requires set I or II");
    t.middleQubits = static_cast<int>(toLL(expectField("middle"), "middle"));
    if (t.middleQubits < 2 || t.middleQubits > 3)
      throw ParseError(lineNo, "middle must be 2 or 3");
  } else if (t.set != scenarios::MeasurementSet::Tetrahedron) {
    throw ParseError(lineNo, "kind b requires set tetrahedron");
  }
  t.shots = toLL(expectField("shots"), "shots");
  long long jobs = toLL(expectField("jobs"), "jobs");
  if (jobs < 1 || jobs > 1000000) throw ParseError(lineNo, "bad job count");
  t.repetitions =
      static_cast<int>(toLL(expectField("repetitions"), "repetitions"));
  std::string seed = expectField("seed");
  if (seed == "none") {
    t.synthetic = false;
  } else {
    t.synthetic = true;
    try {
      t.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw ParseError(lineNo, "bad seed '" + seed + "'");
    }
  }
  t.device = expectField("device");

  t.jobs.resize(jobs);
  for (long long j = 0; j < jobs; ++j) {
    std::string idx = expectField("job");
    if (toLL(idx, "job index") != j)
      throw ParseError(lineNo, "jobs must appear in order; expected job " +
                                   std::to_string(j));
    auto& job = t.jobs[j];
    if (t.kind == ScenarioKind::A) {
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
          std::string rest = expectField("setting");
          std::istringstream ls(rest);
          long long si, sj, c0, c1, c2, c3;
          if (!(ls >> si >> sj >> c0 >> c1 >> c2 >> c3))
            throw ParseError(lineNo, "setting line needs i j and 4 counts");
          std::string extra;
          if (ls >> extra) throw ParseError(lineNo, "trailing fields");
          if (si != i + 1 || sj != k + 1)
            throw ParseError(lineNo, "expected setting " +
                                         std::to_string(i + 1) + " " +
                                         std::to_string(k + 1));
          job.settings[i][k] = {c0, c1, c2, c3};
        }
    } else {
      for (int a = 0; a < 8; ++a) {
        std::string rest = expectField("counts");
        std::istringstream ls(rest);
        std::string bits;
        if (!(ls >> bits) || bits.size() != 3 ||
            bits.find_first_not_of("01") != std::string::npos)
          throw ParseError(lineNo, "counts line needs a 3-bit A-outcome");
        int aIdx = (bits[0] - '0') * 4 + (bits[1] - '0') * 2 + (bits[2] - '0');
        if (aIdx != a)
          throw ParseError(lineNo, "rows must appear in A-outcome order");
        for (int b = 0; b < 8; ++b) {
          long long c;
          if (!(ls >> c)) throw ParseError(lineNo, "counts line needs 8 cells");
          job.raw[a * 8 + b] = c;
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineNo, "trailing fields");
      }
    }
  }
  if (!nextLine() || line != "end")
    throw ParseError(lineNo, "expected trailing 'end'");
  if (nextLine()) throw ParseError(lineNo, "content after 'end'");

  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineNo, e.what());
  }
  return t;
}

std::uint64_t countsDigest(const stats::CountsTable& table) {
  std::string canon = serializeCounts(table);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digestHex(std::uint64_t digest) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << digest;
  return os.str();
}

stats::CountsTable readCountsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseCounts(buf.str());
}

void writeCountsFile(const std::string& path,
                     const stats::CountsTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serializeCounts(table);
}

RunReport buildRunReport(const stats::CountsTable& table,
                         bool includeNoSignaling) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.scores = stats::scoreDataset(table);
  if (includeNoSignaling && table.kind == ScenarioKind::A)
    rep.noSignaling = stats::noSignalingTest(table);
  rep.inputDigest = digestHex(countsDigest(table));
  rep.toolVersion = kToolVersion;
  rep.wallSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

void printRunReport(std::ostream& os, const RunReport& report,
                    ScenarioKind kind) {
  const double unit = kind == ScenarioKind::A ? 1e-6 : 1e-12;
  const char* unitLabel = kind == ScenarioKind::A ? "1e-6" : "1e-12";
  os << "# " << report.toolVersion << "\n";
  os << "# input digest " << report.inputDigest << "\n";
  os << "# units " << unitLabel << " (raw values in brackets)\n";
  os << std::left << std::setw(6) << (kind == ScenarioKind::A ? "" : "a0b0")
     << std::right << std::setw(12) << "W" << std::setw(12) << "dW"
     << std::setw(12) << "W'" << std::setw(12) << "dW'" << std::setw(9) << "z"
     << std::setw(9) << "z'" << "\n";
  os << std::fixed;
  for (const auto& row : report.scores) {
    const auto& r = row.report;
    os << std::left << std::setw(6) << row.label << std::right
       << std::setprecision(3) << std::setw(12) << r.W / unit << std::setw(12)
       << r.deltaW / unit << std::setw(12) << r.Wprime / unit << std::setw(12)
       << r.deltaWprime / unit << std::setprecision(2) << std::setw(9)
       << r.zScore << std::setw(9) << r.zScorePrime << "\n";
    if (r.adjugateDegenerate)
      os << "  warning: adjugate vanished; the error estimate is unreliable\n";
  }
  os.unsetf(std::ios_base::fixed);
  os << std::setprecision(12);
  for (const auto& row : report.scores)
    os << "  raw " << (row.label.empty() ? "-" : row.label) << " W="
       << row.report.W << " dW=" << row.report.deltaW
       << " W'=" << row.report.Wprime << " dW'=" << row.report.deltaWprime
       << " N=" << row.report.nShots << " jobs=" << row.report.jobCount
       << "\n";
  if (report.noSignaling) {
    os << "no-signaling: max |z| = " << std::setprecision(3)
       << report.noSignaling->maxAbsZ
       << " (Bonferroni p = " << report.noSignaling->bonferroniP << " over "
       << report.noSignaling->comparisons.size() << " comparisons)\n";
  }
}

void printNoSignaling(std::ostream& os, const stats::NoSignalingReport& rep) {
  os << "party outcome cond1 cond2         p1         p2       z\n";
  os << std::fixed;
  for (const auto& c : rep.comparisons) {
    os << "    " << c.party << "       " << c.outcome << "     " << c.cond1
       << "     " << c.cond2 << " " << std::setprecision(6) << std::setw(10)
       << c.p1 << " " << std::setw(10) << c.p2 << " " << std::setprecision(2)
       << std::setw(7) << c.z << "\n";
  }
  os.unsetf(std::ios_base::fixed);
  os << "max |z| = " << std::setprecision(3) << rep.maxAbsZ
     << ", Bonferroni-adjusted p = " << rep.bonferroniP << "\n";
}

}  // namespace io
}  // namespace schmidt
