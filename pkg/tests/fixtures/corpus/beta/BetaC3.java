package beta ;

/** Generated class BetaC3. */
public class BetaC3 extends BetaC0 implements BetaSized {
    private int f0 = 0 ;
    private static int s0 = 0 ;
    public int shared = 1 ;

    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    public int area ( int s ) { return s * s ; }

    void work0 ( int p0 , int p1 ) {
        int v = 0 ;
        // keep going
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
    }
}

/** Generated class BetaC4. */
class BetaC4 implements BetaSized {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private int f2 = 2 ;
    private static int s0 = 0 ;
    public int shared = 1 ;
    private alpha . AlphaC2 helper = new alpha . AlphaC2 ( ) ;

    public BetaC4 ( ) { }
    public void setF0 ( int v ) { this . f0 = v ; }
    public void setF1 ( int v ) { this . f1 = v ; }
    public int getF2 ( ) { return f2 ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    static int twice ( int t ) { return t * s0 ; }

    /** Work item 0. */
    private void work0 ( int p0 , int p1 ) {
        int v = f2 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        v = v + helper . peek ( v ) ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        v = v + helper . shared ;
        f2 = v ;
    }

    protected void work1 ( int p0 , int p1 , int p2 ) {
        int v = f2 ;
        v = v + helper . peek ( v ) ;
        v = v > 2 ? v : 2 ;
        v = v > 2 ? v : 2 ;
        f2 = v ;
    }
}
