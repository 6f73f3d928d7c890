// tpbs: setup, keygen, sign, verify, open, message and game batches over flat files.
//
// Exit codes: 0 success/accept, 1 reject, 2 policy refusal, 3 usage error, 4 data error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/games/adversaries.hpp"
#include "tpbs/games/batch.hpp"
#include "tpbs/scheme/files.hpp"
#include "tpbs/scheme/policy.hpp"

namespace fs = std::filesystem;
using namespace tpbs;

namespace {

enum Exit : int { kOk = 0, kReject = 1, kRefusal = 2, kUsage = 3, kData = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string seed_hex, params = "desk", out, id, msg, pcw;
    std::string experiment, adversary;
    std::vector<std::string> in, policies;
    std::size_t trials = 1;
    int kappa = 8;
};

Seed resolve_seed(const Options& o) {
    try {
        if (!o.seed_hex.empty()) return parse_seed_hex(o.seed_hex);
        if (const char* env = std::getenv("TPBS_SEED"); env && *env) return parse_seed_hex(env);
    } catch (const Error& e) {
        throw UsageError(std::string("bad seed: ") + e.what());
    }
    return system_seed();
}

// A malformed bitstring on the command line is a usage error, not a data error.
BitVector hex_arg(const std::string& hex, std::size_t len, const char* flag) {
    try {
        return hex_to_bits(hex, len);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

// Input files keyed by their magic tag.
class Inputs {
public:
    explicit Inputs(const std::vector<std::string>& paths) {
        for (const auto& p : paths) {
            if (fs::is_directory(p)) {
                std::vector<fs::path> entries;
                for (const auto& e : fs::directory_iterator(p))
                    if (e.is_regular_file()) entries.push_back(e.path());
                std::sort(entries.begin(), entries.end());
                for (const auto& e : entries) add(e.string(), false);
            } else {
                add(p, true);
            }
        }
    }

    // Path of the unique input with this magic; explicit files beat directory entries.
    const std::string& path(const std::string& magic, const char* what) const {
        auto explicit_it = explicit_.find(magic);
        if (explicit_it != explicit_.end()) return one(explicit_it->second, what);
        auto dir_it = found_.find(magic);
        if (dir_it != found_.end()) return one(dir_it->second, what);
        throw UsageError(std::string("no ") + what + " file among --in");
    }

    std::string names() const {
        std::string out;
        for (const auto* m : {&explicit_, &found_})
            for (const auto& [_, ps] : *m)
                for (const auto& p : ps) out += (out.empty() ? "" : ", ") + p;
        return out;
    }

private:
    static const std::string& one(const std::vector<std::string>& ps, const char* what) {
        if (ps.size() > 1) throw UsageError(std::string("several ") + what + " files among --in; name one explicitly");
        return ps.front();
    }

    void add(const std::string& path, bool is_explicit) {
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            if (is_explicit) throw IoError("cannot read '" + path + "'");
            return;
        }
        char magic[4] = {};
        f.read(magic, 4);
        if (f.gcount() != 4) {
            if (is_explicit) throw DecodeError("'" + path + "' is too short to be a tpbs file");
            return;
        }
        const std::string tag(magic, 4);
        static const char* kMagics[] = {"TPPA", "TPPP", "TPMS", "TPMD", "TPUK", "TPSG"};
        bool known = false;
        for (const char* m : kMagics) known = known || tag == m;
        if (!known) {
            if (is_explicit) throw DecodeError("'" + path + "' has an unknown file tag");
            return;
        }
        (is_explicit ? explicit_ : found_)[tag].push_back(path);
    }

    std::map<std::string, std::vector<std::string>> explicit_, found_;
};

// Rethrows decoding failures with the offending file name.
template <class F>
auto load(const std::string& path, F decode) {
    const Bytes bytes = read_file(path);
    try {
        return decode(ByteSpan(bytes));
    } catch (const Error& e) {
        throw DecodeError("'" + path + "': " + e.what());
    }
}

Params load_params(const std::string& choice) {
    if (choice == "desk" || choice == "toy") return Params::preset(choice);
    if (fs::exists(choice)) return load(choice, decode_params_file);
    throw UsageError("--params must be 'desk', 'toy' or a params file, got '" + choice + "'");
}

// Files produced under other parameters would otherwise surface as a plain reject.
void check_shape(const PublicParams& pp, const TpbsSignature& sig) {
    const Params& P = pp.params;
    if (sig.c1.modulus() != P.q || sig.c2.modulus() != P.q || sig.c1.size() != static_cast<std::size_t>(P.m) ||
        sig.c2.size() != static_cast<std::size_t>(P.l1))
        throw DimensionError("signature ciphertext does not match the public parameters");
}

void check_shape(const PublicParams& pp, const UserSigningKey& usk) {
    const Params& P = pp.params;
    bool ok = usk.id.size() == static_cast<std::size_t>(P.l1);
    for (const auto& c : usk.certs)
        ok = ok && c.p.size() == static_cast<std::size_t>(P.l2) && c.v.size() == static_cast<std::size_t>(2 * P.m);
    if (!ok) throw DimensionError("user key does not match the public parameters");
}

void warn_if_waived(const Params& p) {
    if (!p.enforce_open_bound)
        std::cerr << "warning: preset '" << p.name << "' skips the Open correctness check ("
                  << (p.widths_set() ? p.open_inequality_text() : std::string("widths not yet measured"))
                  << "); opening may mis-round\n";
}

BitVector read_message(const std::string& arg, std::size_t len) {
    if (arg.empty()) throw UsageError("--msg is required");
    std::string hex = arg;
    if (arg.front() == '@') {
        const Bytes raw = read_file(arg.substr(1));
        hex.assign(raw.begin(), raw.end());
        while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.pop_back();
    }
    return hex_arg(hex, len, "--msg");
}

fs::path out_dir(const Options& o) {
    const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    return dir;
}

std::string require_out(const Options& o, const char* what) {
    if (o.out.empty()) throw UsageError(std::string("--out is required for the ") + what);
    return o.out;
}

int cmd_setup(const Options& o) {
    Params params = load_params(o.params);
    warn_if_waived(params);
    Rng rng(resolve_seed(o));
    SetupResult r;
    try {
        r = setup(params, rng);
    } catch (const ParamError& e) {
        std::cerr << "error: setup rejected the parameters: " << e.what() << '\n';
        return kData;
    }
    const fs::path dir = out_dir(o);
    write_file((dir / "params.tpbs").string(), encode_params_file(r.pp.params));
    write_file((dir / "pp.tpbs").string(), encode_pp_file(r.pp));
    write_file((dir / "msk.tpbs").string(), encode_msk_file(r.msk));
    write_file((dir / "mdk.tpbs").string(), encode_mdk_file(r.mdk));
    std::cout << "open bound: " << r.pp.params.open_inequality_text() << '\n'
              << "wrote params.tpbs pp.tpbs msk.tpbs mdk.tpbs to " << dir.string() << '\n';
    return kOk;
}

int cmd_keygen(const Options& o) {
    const Inputs in(o.in);
    const PublicParams pp = load(in.path("TPPP", "pp"), decode_pp_file);
    const TrapdoorPair msk = load(in.path("TPMS", "msk"), decode_msk_file);
    if (o.id.empty()) throw UsageError("--id is required");
    if (o.policies.empty()) throw UsageError("at least one --policy is required");
    const BitVector id = hex_arg(o.id, static_cast<std::size_t>(pp.params.l1), "--id");
    std::vector<BitVector> ps;
    for (const auto& p : o.policies) ps.push_back(hex_arg(p, static_cast<std::size_t>(pp.params.l2), "--policy"));
    Rng rng(resolve_seed(o));
    const UserSigningKey usk = keygen(pp, msk, id, ps, rng);
    const std::string out = require_out(o, "user key");
    write_file(out, encode_usk_file(usk));
    std::cout << "wrote usk for id " << bits_to_hex(id) << " with " << ps.size() << " policies to " << out << '\n';
    return kOk;
}

int cmd_sign(const Options& o) {
    const Inputs in(o.in);
    const PublicParams pp = load(in.path("TPPP", "pp"), decode_pp_file);
    const UserSigningKey usk = load(in.path("TPUK", "usk"), decode_usk_file);
    check_shape(pp, usk);
    warn_if_waived(pp.params);
    const BitVector msg = read_message(o.msg, static_cast<std::size_t>(pp.params.n));
    if (o.pcw.empty()) throw UsageError("--pcw is required");
    const BitVector pcw = hex_arg(o.pcw, static_cast<std::size_t>(pp.params.d), "--pcw");
    const std::string out = require_out(o, "signature");
    Rng rng(resolve_seed(o));
    const auto sig = sign(pp, usk, msg, pcw, rng);
    if (!sig.ok()) {
        std::cerr << "refused: " << sig.refusal << '\n';
        return kRefusal;
    }
    write_file(out, encode_signature_file(*sig.value));
    std::cout << "wrote signature to " << out << '\n';
    return kOk;
}

int cmd_verify(const Options& o) {
    const Inputs in(o.in);
    const PublicParams pp = load(in.path("TPPP", "pp"), decode_pp_file);
    const TpbsSignature sig = load(in.path("TPSG", "signature"), decode_signature_file);
    check_shape(pp, sig);
    const BitVector msg = read_message(o.msg, static_cast<std::size_t>(pp.params.n));
    const bool ok = verify(pp, msg, sig);
    std::cout << (ok ? "accept" : "reject") << '\n';
    return ok ? kOk : kReject;
}

int cmd_open(const Options& o) {
    const Inputs in(o.in);
    const PublicParams pp = load(in.path("TPPP", "pp"), decode_pp_file);
    const TrapdoorPair mdk = load(in.path("TPMD", "mdk"), decode_mdk_file);
    const TpbsSignature sig = load(in.path("TPSG", "signature"), decode_signature_file);
    check_shape(pp, sig);
    warn_if_waived(pp.params);
    const BitVector msg = read_message(o.msg, static_cast<std::size_t>(pp.params.n));
    Rng rng(resolve_seed(o));
    const auto r = open(pp, mdk, msg, sig, rng);
    if (!r.ok()) {
        std::cout << "bottom: " << r.refusal << '\n';
        return kReject;
    }
    std::cout << "id " << bits_to_hex(r.value->id) << " noise " << r.value->noise << " bound "
              << r.value->noise_bound << '\n';
    return kOk;
}

// Prints G₁p + G₂·pcw, the message that policy p authorizes under pcw.
int cmd_message(const Options& o) {
    const Inputs in(o.in);
    const PublicParams pp = load(in.path("TPPP", "pp"), decode_pp_file);
    if (o.policies.size() != 1) throw UsageError("exactly one --policy is required");
    if (o.pcw.empty()) throw UsageError("--pcw is required");
    const BitVector p = hex_arg(o.policies.front(), static_cast<std::size_t>(pp.params.l2), "--policy");
    const BitVector pcw = hex_arg(o.pcw, static_cast<std::size_t>(pp.params.d), "--pcw");
    std::cout << bits_to_hex(xor_bits(pp.G1.mul(p), pp.G2.mul(pcw))) << '\n';
    return kOk;
}

int cmd_games(const Options& o) {
    BatchConfig cfg;
    cfg.experiment = o.experiment;
    cfg.adversary = o.adversary;
    cfg.trials = o.trials;
    cfg.params = load_params(o.params);
    cfg.seed = resolve_seed(o);
    cfg.kappa = o.kappa;
    if (cfg.experiment != "sim" && cfg.experiment != "ext")
        throw UsageError("--experiment must be 'sim' or 'ext'");
    if (cfg.adversary.empty()) cfg.adversary = cfg.experiment == "sim" ? "coin-flip" : "honest-signer";
    try {
        if (cfg.experiment == "sim")
            make_sim_adversary(cfg.adversary);
        else
            make_ext_adversary(cfg.adversary);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    warn_if_waived(cfg.params);
    std::ofstream file;
    std::ostream* log = &std::cout;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw IoError("cannot write '" + o.out + "'");
        log = &file;
    }
    std::cout << "seed " << seed_to_hex(cfg.seed) << '\n';
    const BatchSummary s = run_batch(cfg, log);
    std::cout << format_summary(cfg, s) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traceable policy-based signatures over lattices"};
    app.require_subcommand(1);
    Options o;

    auto seed = [&](CLI::App* c) {
        c->add_option("--seed", o.seed_hex, "32-byte hex seed (falls back to TPBS_SEED, then system entropy)");
    };
    auto* c_setup = app.add_subcommand("setup", "Generate params, pp, msk and mdk files");
    c_setup->add_option("--params", o.params, "Preset name (desk, toy) or params file");
    c_setup->add_option("--out", o.out, "Output directory");
    seed(c_setup);

    auto* c_keygen = app.add_subcommand("keygen", "Issue a user key");
    c_keygen->add_option("--in", o.in, "Directories or files holding pp and msk")->required();
    c_keygen->add_option("--id", o.id, "Identity as hex")->required();
    c_keygen->add_option("--policy", o.policies, "Policy as hex (repeatable)")->required();
    c_keygen->add_option("--out", o.out, "Output usk file")->required();
    seed(c_keygen);

    auto* c_sign = app.add_subcommand("sign", "Sign a message under a certified policy");
    c_sign->add_option("--in", o.in, "Directories or files holding pp and usk")->required();
    c_sign->add_option("--msg", o.msg, "Message as hex, or @file")->required();
    c_sign->add_option("--pcw", o.pcw, "Policy-checker witness as hex")->required();
    c_sign->add_option("--out", o.out, "Output signature file")->required();
    seed(c_sign);

    auto* c_verify = app.add_subcommand("verify", "Verify a signature (exit 0 accept, 1 reject)");
    c_verify->add_option("--in", o.in, "Directories or files holding pp and the signature")->required();
    c_verify->add_option("--msg", o.msg, "Message as hex, or @file")->required();

    auto* c_open = app.add_subcommand("open", "Recover the signer identity");
    c_open->add_option("--in", o.in, "Directories or files holding pp, mdk and the signature")->required();
    c_open->add_option("--msg", o.msg, "Message as hex, or @file")->required();
    seed(c_open);

    auto* c_message = app.add_subcommand("message", "Print the message a policy authorizes under a witness");
    c_message->add_option("--in", o.in, "Directory or file holding pp")->required();
    c_message->add_option("--policy", o.policies, "Policy as hex")->required();
    c_message->add_option("--pcw", o.pcw, "Policy-checker witness as hex")->required();

    auto* c_games = app.add_subcommand("games", "Run a batch of SIM or EXT experiments");
    c_games->add_option("--experiment", o.experiment, "sim or ext")->required();
    c_games->add_option("--adversary", o.adversary, "coin-flip, mdk-leak, honest-signer, replay-simsign, forged-ciphertext");
    c_games->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    c_games->add_option("--params", o.params, "Preset name (desk, toy) or params file");
    c_games->add_option("--kappa", o.kappa, "Repetitions per proof")->check(CLI::PositiveNumber);
    c_games->add_option("--out", o.out, "Per-trial log file (default stdout)");
    seed(c_games);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const std::vector<std::string> inputs = o.in;
    try {
        if (c_setup->parsed()) return cmd_setup(o);
        if (c_keygen->parsed()) return cmd_keygen(o);
        if (c_sign->parsed()) return cmd_sign(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_open->parsed()) return cmd_open(o);
        if (c_message->parsed()) return cmd_message(o);
        if (c_games->parsed()) return cmd_games(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        std::string files;
        for (const auto& p : inputs) files += (files.empty() ? "" : ", ") + p;
        std::cerr << "error: " << e.what() << " (inputs: " << files << ")\n";
        return kData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    }
    return kUsage;
}
