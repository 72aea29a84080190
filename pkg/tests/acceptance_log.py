"""Shared record of acceptance outcomes, printed at the end of the pytest run."""

RESULTS = {}


def record(k, ok, detail):
    RESULTS[k] = (bool(ok), detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")
    return ok
