"""Command line client.

A thin front end: arguments are marshalled into the service request models
and dispatched either in process (default) or to a running service when
--url is given.  Output is canonical JSON (sorted keys, LF newline); exit
status 0 on success, 1 when a verify suite fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .rootsys import InputError
from .service import handlers, schemas as s

ENDPOINTS = {
    "datum": ("/datum", s.DatumRequest, handlers.describe_datum),
    "hd findim": ("/hd/findim", s.HdFindimRequest, handlers.hd_findim),
    "hd aq": ("/hd/aq", s.HdAqRequest, handlers.hd_aq),
    "hd ds": ("/hd/ds", s.HdDsRequest, handlers.hd_ds),
    "hd hw": ("/hd/hw", s.HdHwRequest, handlers.hd_hw),
    "index": ("/index", s.IndexRequest, handlers.dirac_index),
    "pairing ell": ("/pairing/ell", s.PairingEllRequest, handlers.pairing_ell),
    "pairing t81": ("/pairing/t81", s.PairingT81Request, handlers.pairing_t81),
    "kl table": ("/kl/table", s.KlTableRequest, handlers.kl_table),
    "kl parabolic": ("/kl/parabolic", s.KlParabolicRequest, handlers.kl_parabolic),
    "transfer factor": ("/transfer/factor", s.TransferFactorRequest,
                        handlers.transfer_factor),
    "transfer findim": ("/transfer/findim", s.TransferFindimRequest,
                        handlers.transfer_findim),
    "transfer ds": ("/transfer/ds", s.TransferDsRequest, handlers.transfer_ds),
    "verify": ("/verify", s.VerifyRequest, handlers.run_verify),
}


def _ints(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _datum_spec(args: argparse.Namespace) -> s.DatumSpec:
    if args.datum:
        with open(args.datum, encoding="utf-8") as fh:
            raw = json.load(fh)
        return s.DatumSpec(**raw)
    if not args.type or args.grading is None:
        raise InputError("provide --datum FILE or both --type and --grading")
    return s.DatumSpec(type=args.type, grading=_ints(args.grading))


def _sub_selector(args: argparse.Namespace) -> s.SubSelector:
    if args.sub is not None and args.sub_indices is not None:
        raise InputError("use --sub or --sub-indices, not both")
    if args.sub is not None:
        return s.SubSelector(name=args.sub)
    if args.sub_indices is not None:
        return s.SubSelector(indices=_ints(args.sub_indices))
    raise InputError("a subsystem is required (--sub NAME or --sub-indices I,J)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liedirac",
        description="Exact Dirac cohomology, index, pairing and transfer computations.",
    )
    parser.add_argument("--url", help="base URL of a running service; "
                                      "default is in-process execution")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_datum_args(p):
        p.add_argument("--datum", help="path to a datum JSON file")
        p.add_argument("--type", help="Cartan type label, e.g. B2 or A1xA1")
        p.add_argument("--grading", help="comma separated 0/1 bits per simple root")

    p = sub.add_parser("datum", help="derive and print the real-form datum")
    add_datum_args(p)

    hd = sub.add_parser("hd", help="Dirac cohomology of a module family")
    hd_sub = hd.add_subparsers(dest="family", required=True)
    p = hd_sub.add_parser("findim")
    add_datum_args(p)
    p.add_argument("--lambda", dest="weight", required=True,
                   help="doubled coordinates of the highest weight")
    p = hd_sub.add_parser("aq")
    add_datum_args(p)
    p.add_argument("--h", dest="defining", required=True,
                   help="dominant defining coweight, comma separated")
    p.add_argument("--lambda", dest="weight", required=True)
    p = hd_sub.add_parser("ds")
    add_datum_args(p)
    p.add_argument("--lambda", dest="weight", required=True,
                   help="doubled coordinates of the Harish-Chandra parameter")
    p = hd_sub.add_parser("hw")
    add_datum_args(p)
    p.add_argument("--levi", required=True, help="simple root indices of the Levi")
    p.add_argument("--lambda", dest="weight", required=True)

    p = sub.add_parser("index", help="Dirac index character")
    add_datum_args(p)
    p.add_argument("--family", choices=["findim", "aq", "ds"], required=True)
    p.add_argument("--lambda", dest="weight", required=True)
    p.add_argument("--h", dest="defining", help="defining coweight (aq only)")

    pairing = sub.add_parser("pairing", help="elliptic pairings")
    pairing_sub = pairing.add_subparsers(dest="kind", required=True)
    p = pairing_sub.add_parser("ell")
    add_datum_args(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--mu2", required=True)
    p = pairing_sub.add_parser("t81")
    add_datum_args(p)
    p.add_argument("--lambda", dest="weight", required=True)
    p.add_argument("--lambda2", dest="weight2", required=True)

    klp = sub.add_parser("kl", help="Kazhdan-Lusztig tables")
    kl_sub = klp.add_subparsers(dest="kind", required=True)
    p = kl_sub.add_parser("table")
    p.add_argument("--type", required=True)
    p = kl_sub.add_parser("parabolic")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", required=True)
    p.add_argument("--singular", default="")

    tr = sub.add_parser("transfer", help="endoscopic transfer")
    tr_sub = tr.add_subparsers(dest="kind", required=True)
    for kind in ("factor", "findim", "ds"):
        p = tr_sub.add_parser(kind)
        add_datum_args(p)
        p.add_argument("--sub", help="subsystem name from the datum file")
        p.add_argument("--sub-indices", help="positive root indices, comma separated")
        if kind == "findim":
            p.add_argument("--lambda", dest="weight", required=True)
        if kind == "ds":
            p.add_argument("--lambda", dest="weight", required=True)

    p = sub.add_parser("verify", help="run an acceptance suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--type")
    p.add_argument("--grading")

    return parser


def _build_request(args: argparse.Namespace) -> tuple[str, object]:
    command = args.command
    if command == "datum":
        return "datum", s.DatumRequest(datum=_datum_spec(args))
    if command == "hd":
        key = f"hd {args.family}"
        if args.family == "findim":
            return key, s.HdFindimRequest(datum=_datum_spec(args),
                                          highest_weight=_ints(args.weight))
        if args.family == "aq":
            return key, s.HdAqRequest(datum=_datum_spec(args),
                                      defining_element=_ints(args.defining),
                                      character=_ints(args.weight))
        if args.family == "ds":
            return key, s.HdDsRequest(datum=_datum_spec(args),
                                      parameter=_ints(args.weight))
        return key, s.HdHwRequest(datum=_datum_spec(args), levi=_ints(args.levi),
                                  highest_weight=_ints(args.weight))
    if command == "index":
        defining = _ints(args.defining) if args.defining else None
        return "index", s.IndexRequest(datum=_datum_spec(args), family=args.family,
                                       weight=_ints(args.weight),
                                       defining_element=defining)
    if command == "pairing":
        if args.kind == "ell":
            return "pairing ell", s.PairingEllRequest(
                datum=_datum_spec(args), mu=_ints(args.mu), mu2=_ints(args.mu2))
        return "pairing t81", s.PairingT81Request(
            datum=_datum_spec(args), parameter=_ints(args.weight),
            parameter2=_ints(args.weight2))
    if command == "kl":
        if args.kind == "table":
            return "kl table", s.KlTableRequest(type=args.type)
        return "kl parabolic", s.KlParabolicRequest(
            type=args.type, levi=_ints(args.levi), singular=_ints(args.singular))
    if command == "transfer":
        key = f"transfer {args.kind}"
        datum = _datum_spec(args)
        selector = _sub_selector(args)
        if args.kind == "factor":
            return key, s.TransferFactorRequest(datum=datum, sub=selector)
        if args.kind == "findim":
            return key, s.TransferFindimRequest(datum=datum, sub=selector,
                                                highest_weight=_ints(args.weight))
        return key, s.TransferDsRequest(datum=datum, sub=selector,
                                        parameter=_ints(args.weight))
    if command == "verify":
        grading = _ints(args.grading) if args.grading else None
        return "verify", s.VerifyRequest(suite=args.suite, bound=args.bound,
                                         type=args.type, grading=grading)
    raise InputError(f"unknown command {command!r}")


def _dispatch(key: str, request: object, url: str | None) -> dict:
    path, _model, handler = ENDPOINTS[key]
    if url is None:
        return handler(request).model_dump()
    import httpx

    response = httpx.post(url.rstrip("/") + path,
                          json=request.model_dump(), timeout=600.0)
    if response.status_code == 422:
        raise InputError(response.json().get("error", response.text))
    response.raise_for_status()
    return response.json()


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        key, request = _build_request(args)
        payload = _dispatch(key, request, args.url)
    except InputError as ex:
        _emit({"error": str(ex)})
        return 2
    except (OSError, json.JSONDecodeError) as ex:
        _emit({"error": str(ex)})
        return 2
    _emit(payload)
    if key == "verify" and not payload.get("passed", False):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
