// Glue for the balayage explorer: builds the measure JSON from the controls,
// calls the wasm module, and renders onto plain canvases. No framework.

import init, {
  balayage_curve,
  bbalayage_field,
  carleson_scaling,
} from "./pkg/balayage_wasm.js";

const $ = (id) => document.getElementById(id);

const controls = {
  type: $("measure-type"),
  radius: $("radius"),
  angle: $("angle"),
  alpha: $("alpha"),
  sigma: $("sigma"),
  nodes: $("nodes"),
  grid: $("grid"),
  s: $("s"),
  depth: $("depth"),
};

function measureJson() {
  const r = parseFloat(controls.radius.value);
  const psi = parseFloat(controls.angle.value);
  const alpha = parseFloat(controls.alpha.value);
  const sigma = parseFloat(controls.sigma.value);
  const atom = {
    type: "atomic",
    atoms: [{ re: r * Math.cos(psi), im: r * Math.sin(psi), mass: 1.0 }],
  };
  const area = { type: "weighted_area", alpha };
  switch (controls.type.value) {
    case "atomic":
      return atom;
    case "radial_segment":
      return { type: "radial_segment", angle: psi };
    case "weighted_area":
      return area;
    case "wt_area":
      return { type: "weight_transform", sigma, base: area };
    case "wt_atomic":
      return { type: "weight_transform", sigma, base: atom };
  }
}

function drawCurve(values) {
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const max = Math.max(...values);
  const min = Math.min(...values, 0);
  const pad = 28;
  ctx.strokeStyle = "#bbb";
  ctx.strokeRect(pad, pad / 2, w - 2 * pad, h - 1.5 * pad);
  ctx.fillStyle = "#555";
  ctx.font = "11px monospace";
  ctx.fillText(`max ${max.toPrecision(4)}`, pad + 4, pad / 2 + 12);
  ctx.fillText("angle 0 .. 2π", w / 2 - 30, h - 4);
  ctx.strokeStyle = "#1f77b4";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  const span = max - min || 1;
  values.forEach((v, i) => {
    const x = pad + ((w - 2 * pad) * i) / (values.length - 1);
    const y = pad / 2 + (h - 1.5 * pad) * (1 - (v - min) / span);
    i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  });
  ctx.stroke();
}

// Blue -> yellow ramp on log-compressed values.
function heat(t) {
  const r = Math.round(255 * Math.min(1, 1.6 * t));
  const g = Math.round(255 * Math.pow(t, 0.8));
  const b = Math.round(200 * (1 - t) + 30);
  return [r, g, b];
}

function drawField(values, grid) {
  const canvas = $("field");
  const ctx = canvas.getContext("2d");
  const image = ctx.createImageData(grid, grid);
  let max = 0;
  for (const v of values) if (Number.isFinite(v)) max = Math.max(max, v);
  const scale = Math.log1p(max) || 1;
  for (let i = 0; i < values.length; i++) {
    const offset = 4 * i;
    if (!Number.isFinite(values[i])) {
      image.data[offset + 3] = 0;
      continue;
    }
    const t = Math.log1p(values[i]) / scale;
    const [r, g, b] = heat(t);
    image.data[offset] = r;
    image.data[offset + 1] = g;
    image.data[offset + 2] = b;
    image.data[offset + 3] = 255;
  }
  // Scale the grid-sized image up to the canvas.
  const tmp = document.createElement("canvas");
  tmp.width = grid;
  tmp.height = grid;
  tmp.getContext("2d").putImageData(image, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.drawImage(tmp, 0, 0, canvas.width, canvas.height);
}

function drawScaling(report) {
  const canvas = $("scaling");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pts = report.samples
    .filter((s) => s.mass > 0)
    .map((s) => [Math.log10(s.length), Math.log10(s.mass)]);
  if (pts.length < 2) {
    ctx.fillStyle = "#555";
    ctx.fillText("not enough positive box masses to plot", 30, h / 2);
    return;
  }
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  const [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  const pad = 40;
  const mapX = (x) => pad + ((w - 2 * pad) * (x - x0)) / (x1 - x0 || 1);
  const mapY = (y) => h - pad - ((h - 2 * pad) * (y - y0)) / (y1 - y0 || 1);
  ctx.strokeStyle = "#bbb";
  ctx.strokeRect(pad, pad / 2, w - 2 * pad, h - 1.5 * pad);
  ctx.fillStyle = "#555";
  ctx.font = "11px monospace";
  ctx.fillText("log10 |I|", w / 2 - 25, h - 6);
  ctx.save();
  ctx.translate(12, h / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText("log10 mass", -30, 0);
  ctx.restore();
  ctx.strokeStyle = "#d62728";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  pts.forEach(([x, y], i) => {
    i === 0 ? ctx.moveTo(mapX(x), mapY(y)) : ctx.lineTo(mapX(x), mapY(y));
  });
  ctx.stroke();
  ctx.fillStyle = "#d62728";
  pts.forEach(([x, y]) => {
    ctx.beginPath();
    ctx.arc(mapX(x), mapY(y), 2.5, 0, 2 * Math.PI);
    ctx.fill();
  });
  const slope =
    report.fitted_slope === null ? "n/a" : report.fitted_slope.toFixed(3);
  $("scaling-summary").textContent =
    `fitted slope ${slope}; empirical sup of mass/|I|^s = ` +
    report.empirical_constant.toPrecision(4) +
    (report.notes.length ? `; note: ${report.notes[0]}` : "");
}

function refreshLabels() {
  $("radius-value").textContent = parseFloat(controls.radius.value).toFixed(2);
  $("angle-value").textContent = parseFloat(controls.angle.value).toFixed(2);
  $("alpha-value").textContent = parseFloat(controls.alpha.value).toFixed(1);
  $("sigma-value").textContent = parseFloat(controls.sigma.value).toFixed(1);
  $("nodes-value").textContent = controls.nodes.value;
  $("grid-value").textContent = controls.grid.value;
  $("s-value").textContent = parseFloat(controls.s.value).toFixed(1);
  $("depth-value").textContent = controls.depth.value;
}

let pending = null;
function schedule() {
  clearTimeout(pending);
  pending = setTimeout(recompute, 120);
}

function recompute() {
  refreshLabels();
  const json = JSON.stringify(measureJson());
  $("measure-json").textContent = json;
  const status = $("status");
  try {
    const t0 = performance.now();
    drawCurve(balayage_curve(json, parseInt(controls.nodes.value, 10)));
    const grid = parseInt(controls.grid.value, 10);
    drawField(bbalayage_field(json, grid), grid);
    const report = JSON.parse(
      carleson_scaling(
        json,
        parseFloat(controls.s.value),
        parseInt(controls.depth.value, 10),
      ),
    );
    drawScaling(report);
    status.textContent = `computed in ${(performance.now() - t0).toFixed(0)} ms`;
  } catch (err) {
    status.textContent = `error: ${err}`;
  }
}

init().then(() => {
  Object.values(controls).forEach((c) => c.addEventListener("input", schedule));
  recompute();
});
