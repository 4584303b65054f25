"""
Sweeping a law over a range
===========================

``sweep`` runs a verifier over every instance and counts matches.
Inadmissible instances are skipped, and results come back in enumeration
order whatever the number of worker processes.
"""

from ratquartic.arith import four_one_moduli, primes_up_to
from ratquartic.laws import sweep


def main():
    primes = [p for p in primes_up_to(2000) if p % 4 == 1]
    result = sweep("ec", four_one_moduli(300), primes)
    print(result.summary())

    moduli = four_one_moduli(400)
    serial = sweep("scholz", moduli, moduli, jobs=1)
    parallel = sweep("scholz", moduli, moduli, jobs=2)
    print(serial.summary())
    print("same reports:", [r.to_json() for r in serial.reports] == [r.to_json() for r in parallel.reports])

    # The same sweep from the shell:
    #   ratquartic sweep scholz --m-max 400 --n-max 400 --jobs 2 --out scholz.jsonl


if __name__ == "__main__":
    main()
