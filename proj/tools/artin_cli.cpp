// Command-line driver: every subcommand prints one JSON object on stdout.
// Exit codes: 0 success, 1 parse/usage errors, 2 mathematical precondition
// failures, 3 falsification of a guaranteed inequality.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "artin/io.hpp"

namespace {

using artin::ordered_json;

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

artin::Element parse_element(const artin::GradedAlgebra& a, const std::string& text) {
  return a.normal_form(artin::parse_polynomial(text, a.table(), a.field()));
}

std::vector<artin::Scalar> parse_scalar_list(const std::string& text,
                                             const artin::FieldDescriptor& field) {
  std::vector<artin::Scalar> out;
  std::istringstream is(text);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      mpq_class v(piece);
      v.canonicalize();
      out.push_back(artin::Scalar::from_mpq(v, field));
    } catch (const std::exception&) {
      throw artin::InputError("bad scalar '" + piece + "' in list");
    }
  }
  if (out.empty()) throw artin::InputError("empty scalar list");
  return out;
}

ordered_json algebra_summary(const artin::GradedAlgebra& a) {
  ordered_json j;
  if (!a.label().empty()) j["label"] = a.label();
  j["field"] = a.field().str();
  ordered_json vars = ordered_json::array();
  for (int i = 0; i < a.table().size(); ++i)
    vars.push_back(a.table().name(i) + ":" + std::to_string(a.table().weight(i)));
  j["vars"] = vars;
  j["hilbert"] = artin::int_vector_json(a.hilbert());
  j["socle_degree"] = a.socle_degree();
  if (!a.table().is_standard()) {
    // for non-standard gradings the m-adic length can differ from the
    // socle degree; report both, never conflate them
    j["local_socle_degree"] = static_cast<int>(a.local_hilbert().size()) - 1;
  }
  j["dimension"] = a.dimension();
  return j;
}

// Sampling over a finite field certifies only a dominance lower bound; the
// genericity argument needs an infinite field.
void add_sampling_note(ordered_json& j, const artin::FieldDescriptor& f) {
  if (f.kind == artin::FieldKind::PrimeField)
    j["report"]["note"] = "finite field: sampled type is a dominance lower bound";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with graded Artinian algebras: Macaulay inverse systems, "
               "Jordan types, Lefschetz certification, free extensions"};
  app.require_subcommand(1);
  std::function<ordered_json()> run;

  // hilbert <file> [--local]
  {
    auto* cmd = app.add_subcommand("hilbert", "graded (and local) Hilbert function");
    auto file = std::make_shared<std::string>();
    auto local = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "algebra description file")->required();
    cmd->add_flag("--local", *local, "also report the m-adic Hilbert function");
    cmd->callback([=, &run] {
      run = [=] {
        const auto a = artin::GradedAlgebra::build(artin::load_algebra_file(*file));
        ordered_json j;
        j["hilbert"] = artin::int_vector_json(a.hilbert());
        if (*local) j["local_hilbert"] = artin::int_vector_json(a.local_hilbert());
        return j;
      };
    });
  }

  // jordan <file> --element "<poly>"
  {
    auto* cmd = app.add_subcommand("jordan", "Jordan type of a given element");
    auto file = std::make_shared<std::string>();
    auto element = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->add_option("--element", *element, "element of the algebra, e.g. \"x+2*y\"")->required();
    cmd->callback([=, &run] {
      run = [=] {
        const auto a = artin::GradedAlgebra::build(artin::load_algebra_file(*file));
        const auto rep = artin::jordan_type(a, parse_element(a, *element));
        ordered_json j;
        j["partition"] = artin::partition_json(rep.partition);
        j["rank_sequence"] = artin::int_vector_json(rep.rank_sequence);
        j["verdict"] = rep.sljt ? "SLJT" : "NotSLJT";
        j["report"] = artin::jordan_report_json(a, rep);
        return j;
      };
    });
  }

  // generic-jordan <file> [--mode linear|local] [--samples N] [--seed S]
  {
    auto* cmd = app.add_subcommand("generic-jordan", "sampled generic Jordan type");
    auto file = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("linear");
    auto samples = std::make_shared<int>(7);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("file", *file)->required();
    cmd->add_option("--mode", *mode)->check(CLI::IsMember({"linear", "local"}));
    cmd->add_option("--samples", *samples);
    cmd->add_option("--seed", *seed);
    cmd->callback([=, &run] {
      run = [=] {
        const auto a = artin::GradedAlgebra::build(artin::load_algebra_file(*file));
        const auto sm = *mode == "linear" ? artin::SampleMode::LinearForms
                                          : artin::SampleMode::MaximalIdeal;
        const auto res = artin::generic_jordan_type(a, sm, *samples, *seed);
        ordered_json j;
        j["partition"] = artin::partition_json(res.partition);
        j["witness"] = artin::element_string(a, res.witness);
        j["seed"] = *seed;
        add_sampling_note(j, a.field());
        return j;
      };
    });
  }

  // lefschetz <file> [--mode sl|sljt]
  {
    auto* cmd = app.add_subcommand("lefschetz", "strong Lefschetz / SLJT certification");
    auto file = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("sl");
    auto samples = std::make_shared<int>(7);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("file", *file)->required();
    cmd->add_option("--mode", *mode)->check(CLI::IsMember({"sl", "sljt"}));
    cmd->add_option("--samples", *samples);
    cmd->add_option("--seed", *seed);
    cmd->callback([=, &run] {
      run = [=] {
        const auto a = artin::GradedAlgebra::build(artin::load_algebra_file(*file));
        const auto cm = *mode == "sl" ? artin::CertifyMode::SL_graded
                                      : artin::CertifyMode::SLJT_local;
        const auto rep = artin::lefschetz_certify(a, cm, *samples, *seed);
        ordered_json j;
        j["verdict"] = rep.verdict;
        j["report"] = artin::lefschetz_report_json(a, rep);
        j["seed"] = *seed;
        add_sampling_note(j, a.field());
        return j;
      };
    });
  }

  // dominance "<p1>" "<p2>"
  {
    auto* cmd = app.add_subcommand("dominance", "compare partitions in dominance order");
    auto p1 = std::make_shared<std::string>();
    auto p2 = std::make_shared<std::string>();
    cmd->add_option("p1", *p1)->required();
    cmd->add_option("p2", *p2)->required();
    cmd->callback([=, &run] {
      run = [=] {
        const auto d =
            artin::dominance_compare(artin::parse_partition(*p1), artin::parse_partition(*p2));
        ordered_json j;
        j["verdict"] = artin::dominance_name(d);
        return j;
      };
    });
  }

  // conjugate "<p>"
  {
    auto* cmd = app.add_subcommand("conjugate", "conjugate partition");
    auto p = std::make_shared<std::string>();
    cmd->add_option("p", *p)->required();
    cmd->callback([=, &run] {
      run = [=] {
        ordered_json j;
        j["partition"] = artin::partition_json(artin::parse_partition(*p).conjugate());
        return j;
      };
    });
  }

  // cg-tensor "<p>" "<q>" [--char c]
  {
    auto* cmd = app.add_subcommand("cg-tensor", "Clebsch-Gordan tensor of Jordan types");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    auto chr = std::make_shared<long>(0);
    cmd->add_option("p", *p)->required();
    cmd->add_option("q", *q)->required();
    cmd->add_option("--char", *chr, "field characteristic (0 = Q)");
    cmd->callback([=, &run] {
      run = [=] {
        ordered_json j;
        j["partition"] = artin::partition_json(
            artin::cg_tensor(artin::parse_partition(*p), artin::parse_partition(*q), *chr));
        return j;
      };
    });
  }

  // tensor <fileA> <fileB>
  {
    auto* cmd = app.add_subcommand("tensor", "tensor product algebra");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    cmd->add_option("fileA", *fa)->required();
    cmd->add_option("fileB", *fb)->required();
    cmd->callback([=, &run] {
      run = [=] {
        const auto a = artin::GradedAlgebra::build(artin::load_algebra_file(*fa));
        const auto b = artin::GradedAlgebra::build(artin::load_algebra_file(*fb));
        const auto c = artin::tensor_algebra(a, b);
        ordered_json j;
        j["hilbert"] = artin::int_vector_json(c.hilbert());
        j["report"] = algebra_summary(c);
        return j;
      };
    });
  }

  // verify-ext <triple-file>
  {
    auto* cmd = app.add_subcommand("verify-ext", "verify a free-extension triple");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file)->required();
    cmd->callback([=, &run] {
      run = [=] {
        const auto triple = artin::load_triple_file(*file);
        const auto rep = artin::verify_free_extension(triple);
        ordered_json j;
        j["verdict"] = rep.verdict;
        j["report"] = artin::extension_report_json(rep);
        return j;
      };
    });
  }

  // dual-ext <fileB> --m M --g "<divided-poly>"
  {
    auto* cmd = app.add_subcommand(
        "dual-ext", "build a free extension from a dual generator deformation");
    auto file = std::make_shared<std::string>();
    auto m = std::make_shared<int>(1);
    auto g = std::make_shared<std::string>("0");
    cmd->add_option("fileB", *file, "dual-generator presentation of the fiber B")->required();
    cmd->add_option("--m", *m, "base is k[t]/(t^{m+1})")->required();
    cmd->add_option("--g", *g, "deformation term G of degree j_B + m (default 0)");
    cmd->callback([=, &run] {
      run = [=] {
        const auto b_spec = artin::load_algebra_file(*file);
        const auto gp = artin::parse_divided_polynomial(*g, b_spec.table, b_spec.field);
        const auto triple = artin::build_dual_extension(b_spec, *m, gp);
        const auto rep = artin::verify_free_extension(triple);
        ordered_json j;
        j["verdict"] = rep.verdict;
        j["hilbert"] = artin::int_vector_json(triple.C.hilbert());
        ordered_json r;
        r["C"] = algebra_summary(triple.C);
        r["extension"] = artin::extension_report_json(rep);
        j["report"] = r;
        return j;
      };
    });
  }

  // valid-g <fileB> --m M
  {
    auto* cmd = app.add_subcommand("valid-g", "basis of admissible deformation terms G");
    auto file = std::make_shared<std::string>();
    auto m = std::make_shared<int>(1);
    cmd->add_option("fileB", *file)->required();
    cmd->add_option("--m", *m)->required();
    cmd->callback([=, &run] {
      run = [=] {
        const auto b = artin::GradedAlgebra::build(artin::load_algebra_file(*file));
        const auto basis = artin::valid_g_space(b, *m);
        ordered_json j;
        ordered_json r;
        r["degree"] = b.socle_degree() + *m;
        r["dimension"] = basis.size();
        ordered_json arr = ordered_json::array();
        for (const auto& gb : basis) arr.push_back(gb.str());
        r["basis"] = arr;
        j["report"] = r;
        return j;
      };
    });
  }

  // theorem-check <triple-file>
  {
    auto* cmd = app.add_subcommand(
        "theorem-check", "dominance of the extension's Jordan type over the tensor product's");
    auto file = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(7);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("file", *file)->required();
    cmd->add_option("--samples", *samples);
    cmd->add_option("--seed", *seed);
    cmd->callback([=, &run] {
      run = [=] {
        const auto triple = artin::load_triple_file(*file);
        const auto res = artin::theorem_check(triple, *samples, *seed);
        ordered_json j;
        j["verdict"] = artin::theorem_verdict_name(res.verdict);
        ordered_json r;
        r["p_c"] = artin::partition_json(res.p_c);
        r["p_tensor"] = artin::partition_json(res.p_tensor);
        j["report"] = r;
        j["seed"] = *seed;
        return j;
      };
    });
  }

  // deform <triple-file> --ellA "<poly>" --ellB "<poly>" --ts 1,2,3
  {
    auto* cmd = app.add_subcommand("deform", "build the one-parameter family and verify it");
    auto file = std::make_shared<std::string>();
    auto ell_a = std::make_shared<std::string>();
    auto ell_b = std::make_shared<std::string>();
    auto ts = std::make_shared<std::string>("1,2,3");
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("file", *file)->required();
    cmd->add_option("--ellA", *ell_a, "linear form of A")->required();
    cmd->add_option("--ellB", *ell_b,
                    "linear form of B (default: a sampled generic witness)");
    cmd->add_option("--ts", *ts, "comma-separated nonzero parameters");
    cmd->add_option("--seed", *seed, "seed for the default ell_B");
    cmd->callback([=, &run] {
      run = [=] {
        const auto triple = artin::load_triple_file(*file);
        const artin::Element ell_b_elem =
            ell_b->empty()
                ? artin::generic_jordan_type(triple.B, artin::SampleMode::LinearForms, 7, *seed)
                      .witness
                : parse_element(triple.B, *ell_b);
        const auto fam =
            artin::build_family(triple, parse_element(triple.A, *ell_a), ell_b_elem);
        const auto values = parse_scalar_list(*ts, triple.C.field());
        ordered_json r;
        r["diagram_zero"] = artin::verify_diagram_zero(fam).ok;
        ordered_json dt;
        bool all_t = true;
        for (const auto& t : values) {
          const auto res = artin::verify_diagram_t(fam, t);
          dt[t.str()] = res.ok;
          all_t = all_t && res.ok;
        }
        r["diagram_t"] = dt;
        const auto semi = artin::semicontinuity_experiment(fam, values);
        r["p_L0"] = artin::partition_json(semi.p_L0);
        ordered_json plt;
        for (const auto& entry : semi.p_Lt) {
          ordered_json e;
          e["partition"] = artin::partition_json(entry.partition);
          e["versus_L0"] = artin::dominance_name(entry.versus_L0);
          plt[entry.t] = e;
        }
        r["p_Lt"] = plt;
        r["all_dominate"] = semi.all_dominate;
        if (!semi.all_dominate)
          r["note"] = "some t lie outside the open set where P_{L_t} >= P_{L_0}";
        if (fam.ell_A_zero) r["warning"] = "ell_A is zero";
        ordered_json j;
        j["verdict"] = r["diagram_zero"].get<bool>() && all_t && semi.conjugation_ok;
        j["report"] = r;
        return j;
      };
    });
  }

  // coinv <preset> [--r R --n N] [--emit path]
  {
    auto* cmd = app.add_subcommand("coinv", "coinvariant-algebra presets");
    auto preset = std::make_shared<std::string>();
    auto r = std::make_shared<int>(1);
    auto n = std::make_shared<int>(2);
    auto emit_path = std::make_shared<std::string>();
    cmd->add_option("preset", *preset, "g-r-1-n | g-r-1-n-relative | g-r-1-n-chain | g333")
        ->required()
        ->check(CLI::IsMember({"g-r-1-n", "g-r-1-n-relative", "g-r-1-n-chain", "g333"}));
    cmd->add_option("--r", *r);
    cmd->add_option("--n", *n);
    cmd->add_option("--emit", *emit_path, "write the algebra/triple description to a file");
    cmd->callback([=, &run] {
      run = [=] {
        ordered_json j;
        std::string rendered;
        if (*preset == "g-r-1-n" || *preset == "g-r-1-n-relative") {
          const auto spec = *preset == "g-r-1-n" ? artin::coinv_gr1n(*r, *n)
                                                 : artin::coinv_gr1n_relative(*r, *n);
          const auto a = artin::GradedAlgebra::build(spec);
          j["hilbert"] = artin::int_vector_json(a.hilbert());
          j["report"] = algebra_summary(a);
          rendered = artin::render_algebra_file(spec);
        } else {
          const auto triple =
              *preset == "g333" ? artin::g333_triple() : artin::gr1n_chain_triple(*r, *n);
          const auto rep = artin::verify_free_extension(triple);
          j["verdict"] = rep.verdict;
          ordered_json summary;
          summary["A"] = algebra_summary(triple.A);
          summary["B"] = algebra_summary(triple.B);
          summary["C"] = algebra_summary(triple.C);
          summary["extension"] = artin::extension_report_json(rep);
          j["report"] = summary;
          rendered = artin::render_triple_file(triple);
        }
        if (!emit_path->empty()) {
          std::ofstream out(*emit_path);
          if (!out) throw artin::InputError("cannot write " + *emit_path);
          out << rendered;
        }
        return j;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    emit(run());
    return 0;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"]["type"] = [&]() -> std::string {
      if (auto* me = dynamic_cast<const artin::MathError*>(&e)) return me->kind();
      if (dynamic_cast<const artin::FalsificationError*>(&e)) return "Falsification";
      if (dynamic_cast<const artin::ParseError*>(&e)) return "ParseError";
      return "InputError";
    }();
    err["error"]["message"] = e.what();
    if (auto* cf = dynamic_cast<const artin::ConditionFailsError*>(&e)) {
      err["error"]["witness"]["f"] = cf->witness_f();
      err["error"]["witness"]["g"] = cf->witness_g();
    }
    emit(err);
    std::cerr << e.what() << "\n";
    return artin::cli_exit_code(e);
  }
}
