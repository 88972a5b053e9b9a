"""Command-line front end.

Subcommands: orbit, veech, homology, aut, monodromy, decompose, zariski,
pipeline.  Each takes a catalog name or --file <path> pointing at a JSON
origami, renders to canonical JSON (--format json) or plain text
(--format text), and exits with 0 on success.  Package errors carry their
own exit codes (>= 10); argparse owns exit code 2; unexpected exceptions
exit 1.  ``pipeline`` exits 0 exactly when the Zariski verdict is
certified.

Canonical JSON: keys sorted, two-space indent, one trailing newline,
integers bare and non-integer rationals as "p/q" strings with q > 0 and
gcd(p, q) = 1 -- so equal results are equal bytes, and output piped to a
file round-trips byte-identically through any JSON tool that preserves
values.
"""

import argparse
import json
import sys
import traceback
from fractions import Fraction

from . import affine, autgroup, homology, isotypic, orbits, perms, zariski
from .errors import NotCertified, StmError, UnknownName

# ----------------------------------------------------------------- config


class RunConfig:
    """Resolved options for one invocation."""

    def __init__(self, command, name=None, file=None, fmt='text',
                 max_word_len=8, orbit_cap=10**6, basis=None):
        self.command = command
        self.name = name
        self.file = file
        self.fmt = fmt
        self.max_word_len = max_word_len
        self.orbit_cap = orbit_cap
        self.basis = basis

    def load_origami(self):
        if self.file is not None:
            with open(self.file, 'r', encoding='utf-8') as fh:
                return perms.origami_from_json(fh.read())
        if self.name is None:
            raise UnknownName('no surface given: pass a catalog name or '
                              '--file <path>')
        return perms.catalog(self.name)

    def pick_basis(self, o):
        if self.basis == 'paper':
            return homology.surface_basis(o, 'paper')
        if self.basis == 'auto':
            return homology.surface_basis(o, 'auto')
        try:
            return homology.surface_basis(o, 'paper')
        except UnknownName:
            return homology.surface_basis(o, 'auto')


# ------------------------------------------------------------- rendering


def _enc(x):
    """Encode exact values for JSON: Fractions become bare ints when
    integral, "p/q" strings otherwise."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f'{x.numerator}/{x.denominator}'
    if isinstance(x, str):
        return x
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    if x is None:
        return None
    raise TypeError(f'cannot encode {type(x).__name__} for JSON output')


def render_json(obj):
    return json.dumps(_enc(obj), sort_keys=True, indent=2) + '\n'


def _fmt_num(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else \
        f'{x.numerator}/{x.denominator}'


def _fmt_matrix(M, indent='  '):
    rows = [[_fmt_num(x) for x in row] for row in M]
    width = max((len(s) for row in rows for s in row), default=1)
    return '\n'.join(indent + '[' + ' '.join(s.rjust(width) for s in row) + ']'
                     for row in rows)


def render_text(obj, indent=''):
    """Generic plain-text renderer for the result dictionaries."""
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict):
                lines.append(f'{indent}{k}:')
                lines.append(render_text(v, indent + '  '))
            elif _is_matrix(v):
                lines.append(f'{indent}{k}:')
                lines.append(_fmt_matrix(v, indent + '  '))
            elif isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f'{indent}{k}:')
                for i, item in enumerate(v):
                    lines.append(f'{indent}  [{i}]')
                    lines.append(render_text(item, indent + '    '))
            elif isinstance(v, (list, tuple)):
                lines.append(f'{indent}{k}: '
                             + ' '.join(_fmt_scalar(x) for x in v))
            else:
                lines.append(f'{indent}{k}: {_fmt_scalar(v)}')
    else:
        lines.append(f'{indent}{_fmt_scalar(obj)}')
    return '\n'.join(line for line in lines if line != '')


def _is_matrix(v):
    return (isinstance(v, (list, tuple)) and v
            and all(isinstance(r, (list, tuple)) and r for r in v)
            and all(isinstance(x, (int, Fraction)) and not isinstance(x, bool)
                    for r in v for x in r))


def _fmt_scalar(v):
    if isinstance(v, bool):
        return 'yes' if v else 'no'
    if isinstance(v, Fraction):
        return _fmt_num(v)
    if isinstance(v, (list, tuple)):
        return '(' + ', '.join(_fmt_scalar(x) for x in v) + ')'
    return str(v)


# ----------------------------------------------------------- sub-commands


def _surface_section(o, cfg):
    return {
        'squares': o.n,
        'sigma_h': perms.cycle_string(o.h),
        'sigma_v': perms.cycle_string(o.v),
        'genus': perms.genus(o),
        'singularities': perms.singularity_profile(o),
    }


def cmd_orbit(o, cfg):
    g = orbits.orbit(o, cap=cfg.orbit_cap)
    nodes = []
    for i, node in enumerate(g.nodes):
        nodes.append({
            'index': i,
            'sigma_h': perms.cycle_string(node.h),
            'sigma_v': perms.cycle_string(node.v),
            'tree_word': g.tree_words[i] or '-',
        })
    edges = []
    for i in range(len(g.nodes)):
        for letter in 'TtSs':
            j, _ = g.edges[(i, letter)]
            edges.append({'from': i, 'letter': letter, 'to': j})
    return {
        'surface': _surface_section(o, cfg),
        'orbit_size': len(g.nodes),
        'nodes': nodes,
        'edges': edges,
    }


def cmd_veech(o, cfg):
    g = orbits.orbit(o, cap=cfg.orbit_cap)
    gens = orbits.veech_generators(g)
    return {
        'surface': _surface_section(o, cfg),
        'orbit_size': len(g.nodes),
        'index_in_SL2Z': len(g.nodes),
        'generators': [{'word': w.letters, 'matrix': w.matrix}
                       for w in gens],
    }


def cmd_homology(o, cfg):
    basis = cfg.pick_basis(o)
    hols = [basis.hb.holonomy(c) for c in basis.curves]
    return {
        'surface': _surface_section(o, cfg),
        'dimension': basis.dim,
        'curves': [{'name': nm, 'holonomy': [h.hx, h.hy]}
                   for nm, h in zip(basis.names, hols)],
        'intersection_form': basis.omega(),
        'zero_holonomy': [{'name': nm, 'combination': z}
                          for nm, z in zip(basis.zero_names,
                                           basis.zero_combos)],
    }


def cmd_aut(o, cfg):
    basis = cfg.pick_basis(o)
    group = autgroup.automorphisms(o)
    gens = []
    for phi in group.generators:
        gens.append({
            'permutation': perms.cycle_string(phi),
            'matrix': autgroup.aut_action(o, phi, basis),
        })
    return {
        'surface': _surface_section(o, cfg),
        'order': group.order,
        'abelian': group.abelian,
        'structure': group.structure,
        'generators': gens,
    }


def cmd_monodromy(o, cfg):
    basis = cfg.pick_basis(o)
    graph = orbits.orbit(o, cap=cfg.orbit_cap)
    els = affine.monodromy_generators(o, basis=basis, graph=graph)
    return {
        'surface': _surface_section(o, cfg),
        'orbit_size': len(graph.nodes),
        'generators': [{
            'word': el.word,
            'derivative': el.derivative,
            'matrix_full': el.matrix_full,
            'matrix_zero': el.matrix_zero,
        } for el in els],
    }


def cmd_decompose(o, cfg):
    basis = cfg.pick_basis(o)
    rep = autgroup.hom_rep(o, basis)
    report = isotypic.isotypic_decomposition(rep, omega=basis.omega())
    comps = []
    for c in report.components:
        comps.append({
            'dimension': c.dim,
            'multiplicity': c.multiplicity,
            'irreducible_dimension': c.irr_dim,
            'division_algebra': c.tag,
            'centralizer_dimension': c.cent_dim,
            'commutant_dimension': c.commutant_dim,
            'tautological': bool(c.tautological),
            'basis': c.basis,
        })
    bound, name = isotypic.myz_upper_bound(report)
    return {
        'surface': _surface_section(o, cfg),
        'automorphism_group': autgroup.automorphisms(o).structure,
        'dimension': report.dim,
        'components': comps,
        'components_pairwise_orthogonal': report.omega_orthogonal,
        'upper_bound': {'dimension': bound, 'group': name},
    }


def _verdict_section(v):
    return {
        'lower_dim': v.lower_dim,
        'upper_dim': v.upper_dim,
        'group': v.group_name,
        'certified': v.certified,
        'conjugator_depth': v.depth,
        'unipotent_word_length': v.unipotent_len,
    }


def cmd_zariski(o, cfg):
    basis = None
    if perms.genus(o) > 1:
        basis = cfg.pick_basis(o)
    v = zariski.zariski_verdict(o, max_word_len=cfg.max_word_len,
                                orbit_cap=cfg.orbit_cap, basis=basis)
    return {
        'surface': _surface_section(o, cfg),
        'verdict': _verdict_section(v),
    }


def run_pipeline(cfg):
    """Full run: surface -> orbit -> homology -> aut -> decomposition ->
    zariski.  Returns (exit_code, result dict); exit code 0 iff the
    verdict is certified."""
    o = cfg.load_origami()
    out = {'surface': _surface_section(o, cfg)}
    if perms.genus(o) == 1:
        out['monodromy'] = 'trivial monodromy group'
        out['verdict'] = _verdict_section(
            zariski.Verdict(0, 0, 'trivial', True))
        return 0, out
    basis = cfg.pick_basis(o)
    graph = orbits.orbit(o, cap=cfg.orbit_cap)
    gens = orbits.veech_generators(graph)
    out['veech'] = {
        'orbit_size': len(graph.nodes),
        'index_in_SL2Z': len(graph.nodes),
        'generator_words': [w.letters for w in gens],
    }
    group = autgroup.automorphisms(o)
    out['automorphisms'] = {
        'order': group.order,
        'structure': group.structure,
        'abelian': group.abelian,
    }
    rep = autgroup.hom_rep(o, basis, group=group)
    report = isotypic.isotypic_decomposition(rep, omega=basis.omega())
    bound, name = isotypic.myz_upper_bound(report)
    out['isotypic'] = {
        'components': [{
            'dimension': c.dim,
            'multiplicity': c.multiplicity,
            'irreducible_dimension': c.irr_dim,
            'division_algebra': c.tag,
            'tautological': bool(c.tautological),
        } for c in report.components],
        'upper_bound': {'dimension': bound, 'group': name},
    }
    certified = False
    try:
        v = zariski.zariski_verdict(o, max_word_len=cfg.max_word_len,
                                    orbit_cap=cfg.orbit_cap, basis=basis)
        certified = v.certified
    except NotCertified as e:
        v = e.verdict
    out['verdict'] = _verdict_section(v)
    return (0 if certified else NotCertified.exit_code), out


_COMMANDS = {
    'orbit': cmd_orbit,
    'veech': cmd_veech,
    'homology': cmd_homology,
    'aut': cmd_aut,
    'monodromy': cmd_monodromy,
    'decompose': cmd_decompose,
    'zariski': cmd_zariski,
}


# ----------------------------------------------------------------- driver


def build_parser():
    p = argparse.ArgumentParser(
        prog='stm',
        description='Veech groups, homology actions, isotypic '
                    'decompositions, and certified Zariski bounds for '
                    'square-tiled surfaces.')
    sub = p.add_subparsers(dest='command', required=True)
    for name, help_text in [
        ('orbit', 'SL(2,Z)-orbit graph of the surface'),
        ('veech', 'Schreier generators and index of the Veech group'),
        ('homology', 'homology basis, holonomies, intersection form'),
        ('aut', 'automorphism group and its homology action'),
        ('monodromy', 'affine generators and their homology matrices'),
        ('decompose', 'isotypic decomposition and the upper bound'),
        ('zariski', 'certified Zariski closure verdict'),
        ('pipeline', 'everything; exit 0 iff the verdict is certified'),
    ]:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument('name', nargs='?', default=None,
                        help='catalog name (e.g. octahedron-O)')
        sp.add_argument('--file', default=None,
                        help='path to a JSON origami '
                             '{"n": ..., "sigma_h": ..., "sigma_v": ...}')
        sp.add_argument('--format', dest='fmt', choices=('json', 'text'),
                        default='text')
        sp.add_argument('--max-word-len', type=int, default=8,
                        help='conjugator word length cap (zariski)')
        sp.add_argument('--orbit-cap', type=int, default=10**6,
                        help='orbit size cap')
        sp.add_argument('--basis', choices=('paper', 'auto'), default=None,
                        help='curve frame: fixed catalog frame or the '
                             'computed integral basis')
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, name=args.name, file=args.file,
                    fmt=args.fmt, max_word_len=args.max_word_len,
                    orbit_cap=args.orbit_cap, basis=args.basis)
    try:
        if cfg.command == 'pipeline':
            code, out = run_pipeline(cfg)
        else:
            o = cfg.load_origami()
            out = _COMMANDS[cfg.command](o, cfg)
            code = 0
    except NotCertified as e:
        out = {'error': str(e)}
        if e.verdict is not None:
            out['verdict'] = _verdict_section(e.verdict)
        sys.stdout.write(render_json(out) if cfg.fmt == 'json'
                         else render_text(out) + '\n')
        return e.exit_code
    except StmError as e:
        sys.stderr.write(f'stm: {e}\n')
        return e.exit_code
    except BrokenPipeError:
        return 1
    except Exception:
        traceback.print_exc()
        return 1
    sys.stdout.write(render_json(out) if cfg.fmt == 'json'
                     else render_text(out) + '\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
