import csv
import os

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "results")


def write_csv(name, header, rows):
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, name)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow(["%.17g" % v for v in row])
    print("wrote", os.path.normpath(path))
