#!/usr/bin/env python
# encoding: utf-8
"""
golaytools.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Command line front end for charm bracelet generation, counting, sequence analysis,
the compressed periodic Golay pair search and SDS verification.

Examples:
    ./golaytools.py gen --n 5 --k 4 --mode charm
    ./golaytools.py count --n 1..8 --k 2
    ./golaytools.py analyze -- ++-+ +++-
    ./golaytools.py compress --m 2 -- ++-+-+--
    ./golaytools.py search --v 10 --candidate-dir /tmp/cands --report v10.json
    ./golaytools.py lift --a 0,2,0,2,0 --b 2,0,-2,0,0
    ./golaytools.py verify-sds data/sds_68.txt
    ./golaytools.py equiv -- ++-+ ++-+ +-++ -+++

Sign strings that start with "-" go after "--"; compressed values use "--a=-2,0,2".

Exit status is 0 on success, 1 when a check fails (invalid SDS, pairs not equivalent,
an aborted search) and 2 on a bad invocation.

Long searches can run from cron; set GOLAY_NOTIFY_EMAIL to get tracebacks by mail:
00  22  *  *  *  cd ~/golay; ./golaytools.py search --config v18.json --notify me@example.com

Use --help on any subcommand for its options.
"""

import argparse
import contextlib
import logging
import os
import sys
import traceback

import charm_count
import golay_search
import gt_email
import gt_log
import necklaces
import sds
import sequences

log = logging.getLogger(__name__)

# Set to 1 to re-raise unexpected errors instead of mailing them
DEBUG_MODE = int(os.environ.get('GOLAY_DEBUG_MODE', 0))
NOTIFY_EMAIL = os.environ.get('GOLAY_NOTIFY_EMAIL')

EXIT_OK = 0
EXIT_FAILED = 1


class UsageError(ValueError):
    pass


def parse_range(text: str) -> list:
    """"5", "1..8" or "1,3,5" as a list of positive integers."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
        else:
            lo = hi = None
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError("can't read %r as N, LO..HI or a comma list" % text) from None
    if lo is not None:
        if lo > hi:
            raise UsageError("range %r runs backwards: %d > %d" % (text, lo, hi))
        values = list(range(lo, hi + 1))
    if min(values) < 1:
        raise UsageError("range %r must hold positive integers" % text)
    return values


def parse_ints(text: str, count: int, flag: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("%s expects %d comma separated integers, got %r" % (flag, count, text)) from None
    if len(values) != count:
        raise UsageError("%s expects %d comma separated integers, got %r" % (flag, count, text))
    return values


@contextlib.contextmanager
def open_output(path):
    if path and path != "-":
        with open(path, "w") as fp:
            yield fp
    else:
        yield sys.stdout


def cmd_gen(args, out) -> int:
    def visit(word):
        out.write(necklaces.format_word(word, args.k) + "\n")

    if args.content:
        content = parse_ints(args.content, args.k, "--content")
        if sum(content) != args.n:
            raise UsageError("--content %s sums to %d, expected --n %d" % (args.content, sum(content), args.n))
        total = necklaces.generate_fixed_content(args.n, content, mode=args.mode, visitor=visit)
    else:
        generators = {'necklace': necklaces.generate_necklaces, 'bracelet': necklaces.generate_bracelets,
                      'charm': necklaces.generate_charm_bracelets}
        total = generators[args.mode](args.n, args.k, visit)
    log.info("Generated %d %s representatives (n=%d, k=%d)", total, args.mode, args.n, args.k)
    return EXIT_OK


def cmd_count(args, out) -> int:
    if args.all:
        out.write("n\tnecklaces\tbracelets\tcharm_bracelets\n")
    for n in parse_range(args.n):
        cb = charm_count.count_charm_bracelets(n, args.k)
        if args.all:
            out.write("%d\t%d\t%d\t%d\n" % (n, charm_count.count_necklaces(n, args.k),
                                            charm_count.count_bracelets(n, args.k), cb))
        else:
            out.write("%d\t%d\n" % (n, cb))
    return EXIT_OK


def _row(values) -> str:
    return ",".join(str(int(x)) for x in values)


def _float_row(values) -> str:
    return ",".join("%.6f" % x for x in values)


def cmd_analyze(args, out) -> int:
    seqs = [sequences.parse_sequence(s) for s in args.sequences]
    if len(seqs) > 2:
        raise UsageError("analyze takes one sequence or a pair, got %d" % len(seqs))
    if len(seqs) == 2 and len(seqs[0]) != len(seqs[1]):
        raise UsageError("pair lengths differ: %d vs %d" % (len(seqs[0]), len(seqs[1])))
    for name, seq in zip("AB", seqs):
        out.write("%s length %d rowsum %d zeros %d\n" % (name, len(seq), sequences.row_sum(seq),
                                                        sequences.zero_count(seq)))
        out.write("%s paf %s\n" % (name, _row(sequences.paf(seq))))
        out.write("%s psd %s\n" % (name, _float_row(sequences.psd(seq))))
    if len(seqs) == 2:
        a, b = seqs
        out.write("paf_sum %s\n" % _row(sequences.paf(a) + sequences.paf(b)))
        out.write("psd_sum %s\n" % _float_row(sequences.psd(a) + sequences.psd(b)))
        binary = all(abs(x) == 1 for x in a + b)
        if binary:
            out.write("periodic_golay %s\n" % sequences.is_periodic_golay_pair(a, b))
            out.write("golay %s\n" % sequences.is_golay_pair(a, b))
    return EXIT_OK


def cmd_compress(args, out) -> int:
    seq = sequences.parse_sequence(args.sequence)
    out.write(_row(sequences.compress(seq, args.m)) + "\n")
    return EXIT_OK


def cmd_search(args, out) -> int:
    row_split = parse_ints(args.row_split, 2, "--row-split") if args.row_split else None
    zero_split = parse_ints(args.zero_split, 2, "--zero-split") if args.zero_split else None
    try:
        config = golay_search.SearchConfig.load(args.config, v=args.v, m=args.m, row_split=row_split,
                                                zero_split=zero_split, tolerance=args.tolerance,
                                                candidate_dir=args.candidate_dir, report_path=args.report,
                                                max_candidates=args.max_candidates, lift_cap=args.lift_cap,
                                                threads=args.threads)
    except (golay_search.ConfigError, TypeError) as e:
        raise UsageError(str(e)) from None
    try:
        report = golay_search.run_search(config)
    except (golay_search.StageLimitError, golay_search.LiftCapError, golay_search.SearchLockedError) as e:
        log.error("Search aborted: %s", e)
        return EXIT_FAILED
    if config.report_path:
        golay_search.write_report(report, config.report_path)
    for pair in report.pairs:
        out.write("%s\n" % (pair,))
    stats = report.stats
    log.info("v=%d: %d pair(s); generated %d, PSD-discarded %d, matched %d, lifted %d, verified %d",
             config.v, len(report.pairs), stats['generated'], stats['psd_discarded'], stats['matched'],
             stats['lifted'], stats['verified'])
    if args.notify:
        gt_email.notify(args.notify, report.to_dict())
    return EXIT_OK


def cmd_lift(args, out) -> int:
    a_c = sequences.parse_ternary(args.a)
    b_c = sequences.parse_ternary(args.b)
    if len(a_c) != len(b_c):
        raise UsageError("compressed lengths differ: %d vs %d" % (len(a_c), len(b_c)))
    try:
        pairs = golay_search.stage3_lift(a_c, b_c, 2 * len(a_c), args.tolerance, args.lift_cap)
    except golay_search.LiftCapError as e:
        log.error("%s", e)
        return EXIT_FAILED
    if args.dedupe:
        pairs = sds.dedupe_pairs(pairs)
    for pair in pairs:
        out.write("%s\n" % (pair,))
    return EXIT_OK


def cmd_verify_sds(args, out) -> int:
    params = parse_ints(args.params, 4, "--params") if args.params else sds.SDS_68_PARAMS
    solutions = sds.load_sds_file(args.path, params)
    valid = 0
    for label, s in solutions:
        ok = sds.verify_sds(s)
        golay = sds.is_periodic_golay_sds(s)
        if ok and golay:
            golay = sequences.is_periodic_golay_pair(*sds.sds_to_pair(s))
        valid += ok
        out.write("%s\t(%d; %d, %d; %d)\t%s\t%s\n" % ((label,) + s.params + (
            "valid" if ok else "INVALID", "golay" if golay else "not-golay")))
    out.write("%d/%d valid\n" % (valid, len(solutions)))
    return EXIT_OK if valid == len(solutions) else EXIT_FAILED


def _read_pair_file(path) -> list:
    pairs = []
    with open(path) as fp:
        for line in fp:
            fields = line.split()
            if not fields or fields[0].startswith("#"):
                continue
            if len(fields) != 2:
                raise UsageError("%s: expected 'A B' per line, got %r" % (path, line.strip()))
            pairs.append(sequences.GolayPair(sequences.parse_signs(fields[0]), sequences.parse_signs(fields[1])))
    return pairs


def cmd_equiv(args, out) -> int:
    if args.file:
        if args.sequences:
            raise UsageError("give either --file or two pairs, not both")
        pairs = _read_pair_file(args.file)
        classes = sds.dedupe_pairs(pairs, extended=args.extended)
        for pair in classes:
            out.write("%s\n" % (pair,))
        log.info("%d pairs, %d classes", len(pairs), len(classes))
        return EXIT_OK
    if len(args.sequences) != 4:
        raise UsageError("equiv needs A1 B1 A2 B2, got %d sequences" % len(args.sequences))
    a1, b1, a2, b2 = (sequences.parse_signs(s) for s in args.sequences)
    same = sds.are_equivalent((a1, b1), (a2, b2), extended=args.extended)
    out.write("equivalent\n" if same else "not equivalent\n")
    return EXIT_OK if same else EXIT_FAILED


COMMANDS = {
    'gen': cmd_gen,
    'count': cmd_count,
    'analyze': cmd_analyze,
    'compress': cmd_compress,
    'search': cmd_search,
    'lift': cmd_lift,
    'verify-sds': cmd_verify_sds,
    'equiv': cmd_equiv,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Charm bracelets and periodic Golay pairs')
    parser.add_argument('--logfile', help='Rotating log file (default $GOLAY_LOGFILE); a .json twin is kept too',
                        required=False, type=str)
    parser.add_argument('--verbose', help='Progress and info messages on stderr', required=False,
                        action='store_true')
    parser.add_argument('--output', help='Write results here instead of stdout', required=False, type=str)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('gen', help='Generate necklaces, bracelets or charm bracelets, one per line',
                       description='Strings print as digits for k <= 10, comma separated otherwise.')
    p.add_argument('--n', help='String length', required=True, type=int)
    p.add_argument('--k', help='Alphabet size', required=True, type=int)
    p.add_argument('--mode', help='Representative kind (default charm)', choices=necklaces.MODES, default='charm')
    p.add_argument('--content', help='Fixed content: k comma separated symbol counts summing to n', required=False,
                   type=str)

    p = sub.add_parser('count', help='Count charm bracelets with the closed formula',
                       description='Prints "n<TAB>CB(n,k)" rows; --all adds necklace and bracelet counts.')
    p.add_argument('--n', help='Length: N, LO..HI or a comma list', required=True, type=str)
    p.add_argument('--k', help='Alphabet size', required=True, type=int)
    p.add_argument('--all', help='Also print necklace and bracelet counts', action='store_true')

    p = sub.add_parser('analyze', help='PAF, PSD, row sum and zero count of a sequence or pair',
                       description='Sequences in sign notation (++-+) or comma separated integers.')
    p.add_argument('sequences', nargs='+', help='One sequence, or A and B')

    p = sub.add_parser('compress', help='m-compression of a sequence')
    p.add_argument('--m', help='Compression factor (default 2)', type=int, default=2)
    p.add_argument('sequence', help='Sign notation or comma separated integers')

    p = sub.add_parser('search', help='Compressed search for periodic Golay pairs of length v',
                       description='Candidate files hold "ternary<TAB>paf<TAB>psd_max" lines. The JSON report '
                                   'lists each inequivalent pair and the stage counters. --config reads a JSON '
                                   'object with SearchConfig keys; flags override it.')
    p.add_argument('--v', help='Sequence length (even)', required=False, type=int)
    p.add_argument('--m', help='Compression factor (default 2)', required=False, type=int)
    p.add_argument('--row-split', help='Only this row-sum split a,b', required=False, type=str)
    p.add_argument('--zero-split', help='Only this zero split zA,zB', required=False, type=str)
    p.add_argument('--tolerance', help='PSD tolerance per unit length (default %g)' % sequences.PSD_TOLERANCE,
                   required=False, type=float)
    p.add_argument('--max-candidates', help='Stage 1 record limit per file (default %d)'
                   % golay_search.DEFAULT_MAX_CANDIDATES, required=False, type=int)
    p.add_argument('--lift-cap', help='Largest zero count lifted (default %d)' % golay_search.DEFAULT_LIFT_CAP,
                   required=False, type=int)
    p.add_argument('--candidate-dir', help='Candidate file directory (default $GOLAY_CANDIDATE_DIR or %s)'
                   % golay_search.DEFAULT_CANDIDATE_DIR, required=False, type=str)
    p.add_argument('--report', help='Write the JSON report here', required=False, type=str)
    p.add_argument('--config', help='JSON file of search settings', required=False, type=str)
    p.add_argument('--threads', help='Parallel lifts (default 1)', required=False, type=int)
    p.add_argument('--notify', help='Mail the finished report to this address', required=False, type=str)

    p = sub.add_parser('lift', help='Lift a compressed pair to length 2d periodic Golay pairs')
    p.add_argument('--a', help='Compressed A, comma separated', required=True, type=str)
    p.add_argument('--b', help='Compressed B, comma separated', required=True, type=str)
    p.add_argument('--tolerance', help='PSD tolerance per unit length', type=float, default=sequences.PSD_TOLERANCE)
    p.add_argument('--lift-cap', help='Largest zero count lifted', type=int, default=golay_search.DEFAULT_LIFT_CAP)
    p.add_argument('--dedupe', help='Print one pair per equivalence class', action='store_true')

    p = sub.add_parser('verify-sds', help='Verify supplementary difference sets from a file',
                       description='Structured files hold "v = ", "lambda = ", "X = ", "Y = " lines per record, '
                                   'headed by "# label". Numbered bracket listings need --params.')
    p.add_argument('path', help='SDS file')
    p.add_argument('--params', help='v,r,s,lambda for a bracket listing (default 68,31,29,26)', type=str)

    p = sub.add_parser('equiv', help='Compare two pairs, or dedupe a file of pairs',
                       description='Pairs in sign notation. Files hold one "A B" pair per line.')
    p.add_argument('sequences', nargs='*', help='A1 B1 A2 B2')
    p.add_argument('--file', help='Deduplicate the pairs in this file', type=str)
    p.add_argument('--extended', help='Also allow negation and swapping A and B', action='store_true')
    return parser


def dispatch(args, parser) -> int:
    with open_output(args.output) as out:
        try:
            return COMMANDS[args.command](args, out)
        except UsageError as e:
            parser.error(str(e))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    gt_log.setup_logging(args.logfile, stream_level=logging.INFO if args.verbose else None)
    log.debug("--- golaytools %s start ---", args.command)
    try:
        status = dispatch(args, parser)
    except ValueError as e:
        # bad sequences, contents or multipliers from the command line
        parser.error(str(e))
    except OSError as e:
        log.error("%s", e)
        return EXIT_FAILED
    log.debug("--- golaytools %s end (%d) ---", args.command, status)
    return status


if __name__ == '__main__':
    try:
        sys.exit(main())
    except SystemExit:
        raise
    except Exception:
        log.exception("Unexpected error")
        if DEBUG_MODE or not NOTIFY_EMAIL:
            raise
        gt_email.mail_exception(NOTIFY_EMAIL, traceback.format_exc())
        sys.exit(EXIT_FAILED)
