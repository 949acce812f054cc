from .lang_en import STRINGS as EN


STRINGS = {
    **EN,
    "Version": "symgen {version} • {month_name} de {year}",
    "Description": "Geração simétrica de grupos: progenitores, enumeração de classes laterais e o catálogo de apresentações.",

    "Entry": "Entrada",
    "Status": "Situação",
    "Index": "Índice",
    "Order": "Ordem",
    "Degree": "Grau",
    "Seconds": "Segundos",
    "verified": "verificada",
    "overflow": "estouro",
    "mismatch": "divergência",
    "skipped": "ignorada",
    "{count} entries: {verified} verified, {overflow} overflow, {mismatch} mismatch, {skipped} skipped": "{count} entradas: {verified} verificadas, {overflow} com estouro, {mismatch} divergentes, {skipped} ignoradas",

    "Running {n} catalog entries (scale {scale}).": "Executando {n} entradas do catálogo (escala {scale}).",
    "Cancelled by user.": "Cancelado pelo usuário.",
    "Cancelling…": "Cancelando…",

    "Index: {index}": "Índice: {index}",
    "Order: {order}": "Ordem: {order}",
    "Control group embeds: {embeds}": "Grupo de controle se imerge: {embeds}",
    "Double cosets: {count}": "Classes laterais duplas: {count}",
    "Cosets defined: {defined}, merged: {merged}, in {seconds:.2f}s": "Classes definidas: {defined}, fundidas: {merged}, em {seconds:.2f}s",
    "Enumeration overflowed at {cap} cosets.": "A enumeração estourou em {cap} classes.",

    "C_N(Stab_N({points})) has order {order}:": "C_N(Stab_N({points})) tem ordem {order}:",
    "{n} candidate(s), {survivors} survivor(s):": "{n} candidato(s), {survivors} sobrevivente(s):",
    "index {index}": "índice {index}",
    "collapsed": "colapsou",
    "over cap": "acima do limite",

    "octads {octads} / dodecads {dodecads} / trios {trios}": "octadas {octads} / dodecadas {dodecads} / trios {trios}",
    "Steiner system S(5,8,24): {result}": "Sistema de Steiner S(5,8,24): {result}",
    "ok": "ok",
    "failed": "falhou",
    "{n} dodecads meet dodecad {rep} in 8 points; {orbits} orbit(s) under M22": "{n} dodecadas encontram a dodecada {rep} em 8 pontos; {orbits} órbita(s) sob M22",

    "Wrote {path}": "Gravado: {path}",

    "Error: {message}": "Erro: {message}",
    "Expected {n} argument(s) for '{op}'.": "Esperado(s) {n} argumento(s) para '{op}'.",
}
