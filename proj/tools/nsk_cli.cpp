#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>
#include <CLI11.hpp>

#include "nsk/analysis.hpp"
#include "nsk/attack.hpp"
#include "nsk/errors.hpp"
#include "nsk/nsk_crt.hpp"
#include "nsk/nsk_int.hpp"
#include "nsk/nsk_poly.hpp"
#include "nsk/paper_example.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvalidCiphertext = 3;
constexpr int kExitUnsafe = 4;

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw nsk::Error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary); // keep LF line endings everywhere
    if (!f) throw nsk::Error("cannot open " + path + " for writing");
    return f;
}

std::vector<std::size_t> parse_blocks(const std::string& list) {
    std::vector<std::size_t> out;
    std::istringstream is(list);
    std::string tok;
    while (std::getline(is, tok, ','))
        out.push_back((std::size_t)nsk::BigUint::from_decimal(tok).to_u64());
    if (out.empty()) throw nsk::ParseError("empty block list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicative-knapsack toolkit (polynomial, integer and CRT schemes)"};
    app.require_subcommand(1);

    std::string scheme = "poly", pub_path, sec_path, in_path, out_path, message;
    std::string strategy = "maxrate", blocks = "1024,2048,4096,8192";
    std::uint64_t q = 2, seed = 0, t_max = 10000;
    std::size_t L = 8, max_degree = 5, weight = 0, M = 8, asym_max = 40;
    std::optional<std::size_t> block;
    std::string margin_str = "0", bound_str = "1000";
    int jobs = 1;
    bool csv = false, extended = false;

    auto* kg = app.add_subcommand("keygen", "generate a key pair");
    kg->add_option("--scheme", scheme)->check(CLI::IsMember({"poly", "int", "crt"}));
    kg->add_option("--q", q);
    kg->add_option("--strategy", strategy)->check(CLI::IsMember({"maxrate", "safe", "cw"}));
    kg->add_option("--max-degree", max_degree);
    kg->add_option("--block", block);
    kg->add_option("--weight", weight);
    kg->add_option("--L", L);
    kg->add_option("--margin", margin_str);
    kg->add_option("--seed", seed);
    kg->add_option("--jobs", jobs);
    kg->add_option("--pub", pub_path)->required();
    kg->add_option("--sec", sec_path)->required();

    auto* enc = app.add_subcommand("encrypt", "encrypt a bitstring message");
    enc->add_option("--scheme", scheme)->check(CLI::IsMember({"poly", "int", "crt"}));
    enc->add_option("--pub", pub_path)->required();
    enc->add_option("--message", message)->required();
    enc->add_option("--out", out_path)->required();

    auto* dec = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    dec->add_option("--scheme", scheme)->check(CLI::IsMember({"poly", "int", "crt"}));
    dec->add_option("--sec", sec_path)->required();
    dec->add_option("--in", in_path)->required();

    auto* an = app.add_subcommand("analyze", "information-rate analysis");
    an->require_subcommand(1);
    auto* an_table = an->add_subcommand("table", "block-matching table");
    an_table->add_option("--q", q);
    an_table->add_option("--blocks", blocks);
    an_table->add_flag("--csv", csv);
    auto* an_rate = an->add_subcommand("rate", "closed-formula rate I(q,N)");
    an_rate->add_option("--q", q);
    an_rate->add_option("--max-degree", max_degree);
    auto* an_asym = an->add_subcommand("asymptotic", "I(q,N)*N*log2(q) sweep");
    an_asym->add_option("--q", q);
    an_asym->add_option("--max-N", asym_max);
    auto* an_int = an->add_subcommand("intrate", "integer-scheme desk-scale rate");
    an_int->add_option("--M", M);

    auto* au = app.add_subcommand("audit", "check the subgroup-attack safety conditions");
    au->add_option("--pub", pub_path)->required();
    au->add_flag("--extended", extended);

    auto* at = app.add_subcommand("attack", "run the published attack procedures");
    at->require_subcommand(1);
    auto* at_sub = at->add_subcommand("subgroup", "subgroup attack on a polynomial key");
    at_sub->add_option("--pub", pub_path)->required();
    at_sub->add_option("--in", in_path)->required();
    auto* at_leak = at->add_subcommand("leak", "smoothness probe on an integer public key");
    at_leak->add_option("--pub", pub_path)->required();
    at_leak->add_option("--t-max", t_max);
    at_leak->add_option("--bound", bound_str);

    auto* ex = app.add_subcommand("example", "replay a published worked example");
    std::string which = "paper31";
    ex->add_option("name", which)->check(CLI::IsMember({"paper31"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kg) {
            omp_set_num_threads(jobs > 0 ? jobs : 1);
            if (scheme == "poly") {
                nsk::KeygenStrategy s;
                s.max_degree = max_degree;
                s.seed = seed;
                if (strategy == "maxrate") {
                    s.kind = nsk::KeygenStrategy::Kind::MaxRate;
                    s.target_block_bits = block;
                } else if (strategy == "safe") {
                    s.kind = nsk::KeygenStrategy::Kind::Safe;
                } else {
                    s.kind = nsk::KeygenStrategy::Kind::ConstantWeight;
                    s.weight = weight;
                }
                auto [pk, sk] = nsk::keygen(q, s);
                auto po = open_out(pub_path);
                nsk::write_public_key(po, pk);
                auto so = open_out(sec_path);
                nsk::write_secret_key(so, sk);
                double rate = (double)pk.message_length() /
                              ((double)pk.ring->degree() * std::log2((double)q));
                std::cout << "L " << pk.message_length() << "\nd " << pk.ring->degree()
                          << "\nrate " << nsk::render_percent(rate) << "\n";
            } else if (scheme == "int") {
                auto [pk, sk] =
                    nsk::keygen_int(L, nsk::BigUint::from_decimal(margin_str), seed);
                auto po = open_out(pub_path);
                nsk::write_int_public_key(po, pk);
                auto so = open_out(sec_path);
                nsk::write_int_secret_key(so, sk);
                std::cout << "L " << L << "\np_bits " << pk.p.bit_length() << "\n";
            } else {
                auto [pk, sk] = nsk::keygen_crt(q, L, seed);
                auto po = open_out(pub_path);
                nsk::write_crt_public_key(po, pk);
                auto so = open_out(sec_path);
                nsk::write_crt_secret_key(so, sk);
                double rate = (double)L / ((double)(L + 1) * std::log2((double)q));
                std::cout << "L " << L << "\nrate " << nsk::render_percent(rate) << "\n";
            }
        } else if (*enc) {
            nsk::Message m = nsk::Message::from_string(message);
            if (scheme == "poly") {
                auto pi = open_in(pub_path);
                auto pk = nsk::read_public_key(pi);
                auto co = open_out(out_path);
                nsk::write_ciphertext(co, nsk::encrypt(pk, m));
            } else if (scheme == "int") {
                auto pi = open_in(pub_path);
                auto pk = nsk::read_int_public_key(pi);
                auto co = open_out(out_path);
                nsk::write_int_ciphertext(co, nsk::encrypt_int(pk, m));
            } else {
                auto pi = open_in(pub_path);
                auto pk = nsk::read_crt_public_key(pi);
                auto co = open_out(out_path);
                nsk::write_crt_ciphertext(co, nsk::encrypt_crt(pk, m));
            }
        } else if (*dec) {
            if (scheme == "poly") {
                auto si = open_in(sec_path);
                auto sk = nsk::read_secret_key(si);
                auto ci = open_in(in_path);
                auto c = nsk::read_ciphertext(ci, sk.ring);
                std::cout << nsk::decrypt(sk, c).to_string() << "\n";
            } else if (scheme == "int") {
                auto si = open_in(sec_path);
                auto sk = nsk::read_int_secret_key(si);
                auto ci = open_in(in_path);
                std::cout << nsk::decrypt_int(sk, nsk::read_int_ciphertext(ci)).to_string()
                          << "\n";
            } else {
                auto si = open_in(sec_path);
                auto sk = nsk::read_crt_secret_key(si);
                auto ci = open_in(in_path);
                std::cout << nsk::decrypt_crt(sk, nsk::read_crt_ciphertext(ci)).to_string()
                          << "\n";
            }
        } else if (*an_table) {
            auto report = nsk::matching_table(q, parse_blocks(blocks));
            for (const auto& row : report.rows) {
                if (csv)
                    std::cout << row.L << "," << row.modulus_bits << "," << row.percent << "\n";
                else
                    std::cout << row.L << " " << row.modulus_bits << " " << row.percent << "\n";
            }
        } else if (*an_rate) {
            auto r = nsk::rate_closed_form(q, max_degree);
            std::cout << "L " << r.carriers.to_decimal() << "\ndeg_h " << r.modulus.to_decimal()
                      << "\nrate " << nsk::render_percent(r.rate) << "\n";
        } else if (*an_asym) {
            for (std::size_t N = 1; N <= asym_max; ++N)
                std::cout << N << " " << nsk::asymptotic_ratio(q, N) << "\n";
        } else if (*an_int) {
            auto r = nsk::nsk_int_rate(M);
            std::cout << "L " << r.carriers.to_decimal() << "\nmodulus_bits "
                      << r.modulus.to_decimal() << "\nrate " << nsk::render_percent(r.rate)
                      << "\n";
        } else if (*au) {
            auto pi = open_in(pub_path);
            auto pk = nsk::read_public_key(pi);
            auto report = nsk::audit_safe(pk, extended);
            std::cout << "r " << report.r_value.to_decimal() << "\n";
            std::cout << "r_prime " << (report.r_prime ? "yes" : "no") << "\n";
            // at q=2, r is the whole group order and the carrier condition
            // degenerates to nontriviality
            const char* label =
                report.r_value == pk.ring->group_order() ? " nontrivial " : "^r!=1 ";
            for (std::size_t i = 0; i < report.carrier_check.size(); ++i)
                std::cout << "C" << (i + 1) << label
                          << (report.carrier_check[i] ? "yes" : "no") << "\n";
            if (report.generator_check)
                for (std::size_t i = 0; i < report.generator_check->size(); ++i)
                    std::cout << "C" << (i + 1) << " generator "
                              << ((*report.generator_check)[i] ? "yes" : "no") << "\n";
            std::cout << "verdict " << (report.safe ? "safe" : "unsafe") << "\n";
            if (!report.safe) return kExitUnsafe;
        } else if (*at_sub) {
            auto pi = open_in(pub_path);
            auto pk = nsk::read_public_key(pi);
            auto ci = open_in(in_path);
            auto c = nsk::read_ciphertext(ci, pk.ring);
            auto fact = nsk::factorize(pk.ring->group_order());
            auto bits = nsk::subgroup_attack(pk.carriers, c, fact);
            std::string rendered;
            for (auto b : bits)
                rendered += b == nsk::BitVerdict::Zero ? '0'
                           : b == nsk::BitVerdict::One ? '1'
                                                       : '?';
            std::cout << rendered << "\n";
        } else if (*at_leak) {
            auto pi = open_in(pub_path);
            auto pk = nsk::read_int_public_key(pi);
            auto result =
                nsk::leak_probe(pk.p, t_max, nsk::BigUint::from_decimal(bound_str));
            if (!result) {
                std::cout << "no smooth p-t found\n";
                return kExitInvalidCiphertext;
            }
            std::cout << "t " << result->t << "\nfactors";
            for (const auto& [p, e] : result->factors) {
                std::cout << " " << p.to_decimal();
                if (e > 1) std::cout << "^" << e;
            }
            std::cout << "\n";
        } else if (*ex) {
            auto checks = nsk::replay_paper_example();
            bool unexpected = false;
            for (const auto& check : checks) {
                std::cout << (check.ok ? "match    " : "MISMATCH ") << check.name;
                if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
                std::cout << "\n";
                // the carrier-row permutation is the one documented inconsistency
                if (!check.ok &&
                    check.name != "published carrier rows match p_i^v in definition order")
                    unexpected = true;
            }
            if (unexpected) return kExitInvalidCiphertext;
        }
    } catch (const nsk::InvalidCiphertext& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidCiphertext;
    } catch (const nsk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nsk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
