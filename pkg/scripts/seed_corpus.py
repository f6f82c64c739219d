"""Write a synthetic DNA-like FASTA corpus for the bench and verify commands."""
from pathlib import Path

import click

from models.sequence import Alphabet
from services.alphabet import decode
from services.corpus import random_text
from utils.rng import SeededRng

BASE_DIR = Path(__file__).resolve().parent

DNA = Alphabet(rank_of={ord(c): r for r, c in enumerate("ACGT", start=1)}, byte_of=tuple(b"ACGT"), wildcard_byte=ord("N"))
LINE_WIDTH = 60


def fasta_bytes(payload: bytes, header: str) -> bytes:
    lines = [payload[i:i + LINE_WIDTH] for i in range(0, len(payload), LINE_WIDTH)]
    return b"\n".join([f">{header}".encode()] + lines) + b"\n"


@click.command()
@click.option("--n", "n", type=int, default=1_000_000, show_default=True, help="Corpus length")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--unknown", type=float, default=0.0, show_default=True, help="Fraction of N (wild-card) bases")
@click.option("--output", "-o", type=click.Path(path_type=Path, dir_okay=False),
              default=BASE_DIR / "dna_corpus.fa", show_default=True)
def main(n: int, seed: int, unknown: float, output: Path) -> None:
    text = random_text(n, DNA.sigma, SeededRng(seed), wildcard_density=unknown)
    output.write_bytes(fasta_bytes(decode(text, DNA), f"synthetic n={n} seed={seed}"))
    click.echo(f"Wrote {n} bases to {output}")


if __name__ == "__main__":
    main()
